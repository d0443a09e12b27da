package tonefall.codec;

/** Header math for mpeg audio frames. */
public class Mp3Frame {
    public static int frameLength(int bitrate, int sampleRate, int padding) {
        return 144 * bitrate / sampleRate + padding;
    }
}
