package tonefall.codec;

/** Page level access to ogg streams. */
public class OggStream {
    public byte[] nextPage() {
        return new byte[0];
    }

    public boolean eos() {
        return true;
    }
}
