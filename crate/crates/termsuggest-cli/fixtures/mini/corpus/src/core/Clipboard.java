package tonefall.core;

/** Copy track titles and share links. */
public class Clipboard {
    public void copy(String text) {
        // platform clipboard bridge
    }
}
