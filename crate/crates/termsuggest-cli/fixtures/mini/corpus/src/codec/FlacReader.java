package tonefall.codec;

/** Frame reader for flac containers. */
public class FlacReader {
    public int readFrame(byte[] out) {
        return 0;
    }

    public long totalSamples() {
        return 0L;
    }
}
