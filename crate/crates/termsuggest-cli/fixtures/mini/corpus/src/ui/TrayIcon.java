package tonefall.ui;

/** Status area icon with playback controls in its menu. */
public class TrayIcon {
    private boolean visible = true;
    private String glyphSet = "auto";

    // the tray icon picks glyphs once at startup; a theme switch must
    // call repaint or the icon keeps stale dark glyphs
    public void repaint(String theme) {
        glyphSet = theme.equals("dark") ? "light-glyphs" : "dark-glyphs";
    }

    public void hide() {
        visible = false;
    }

    public String glyphs() {
        return glyphSet;
    }
}
