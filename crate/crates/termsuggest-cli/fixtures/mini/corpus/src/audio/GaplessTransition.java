package tonefall.audio;

/** Blends the tail of the current track into the next one for gapless output. */
public class GaplessTransition {
    private final AudioBuffer tail = new AudioBuffer(4096);
    private double crossfadeSeconds = 1.5;

    // gapless handoff: keep decoding the next track while the tail drains
    public void beginCrossfade(PlaybackEngine engine) {
        engine.prefetchNext();
        tail.mix(engine.currentFrames(), crossfadeSeconds);
    }

    // short buffers make the crossfade stutter when the decoder lags
    public boolean tailReady() {
        return tail.remaining() > 1024;
    }

    public void setCrossfadeSeconds(double seconds) {
        this.crossfadeSeconds = seconds;
    }
}
