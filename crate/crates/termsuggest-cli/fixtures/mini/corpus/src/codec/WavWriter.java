package tonefall.codec;

/** Writes decoded frames back out as wav, used by the ripper. */
public class WavWriter {
    public void writeHeader(int sampleRate, int channels) {
        // 44 byte canonical header
    }

    public void writeFrames(float[] frames) {
    }
}
