package tonefall.audio;

/** Owns the decoder thread and the output line. */
public class PlaybackEngine {
    private AudioDecoder decoder;
    private long frames;

    public void open(String trackId) {
        decoder = AudioDecoder.forTrack(trackId);
    }

    public void start() {
        frames = 0;
    }

    public void hold() {
        // playback resumes from the same frame
    }

    public void prefetchNext() {
        decoder.warm();
    }

    public long currentFrames() {
        return frames;
    }
}
