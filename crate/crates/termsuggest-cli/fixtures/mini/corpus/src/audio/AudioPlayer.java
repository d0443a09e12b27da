package tonefall.audio;

/** Top level playback facade used by the UI. */
public class AudioPlayer {
    private final PlaybackEngine engine = new PlaybackEngine();
    private boolean paused;

    public void play(String trackId) {
        engine.open(trackId);
        engine.start();
        paused = false;
    }

    public void pause() {
        engine.hold();
        paused = true;
    }

    public boolean isPaused() {
        return paused;
    }
}
