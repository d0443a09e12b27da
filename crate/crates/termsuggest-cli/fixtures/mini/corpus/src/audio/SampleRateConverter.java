package tonefall.audio;

/** Linear resampler used when the device rate differs from the track rate. */
public class SampleRateConverter {
    private final int sourceRate;
    private final int targetRate;

    public SampleRateConverter(int sourceRate, int targetRate) {
        this.sourceRate = sourceRate;
        this.targetRate = targetRate;
    }

    public int convert(float[] input, float[] output) {
        double ratio = targetRate / (double) sourceRate;
        return (int) (input.length * ratio);
    }
}
