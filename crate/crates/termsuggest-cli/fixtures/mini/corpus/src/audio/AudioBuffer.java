package tonefall.audio;

/** Ring buffer of decoded frames shared by the engine and transitions. */
public class AudioBuffer {
    private final float[] data;
    private int write;
    private int read;

    public AudioBuffer(int capacity) {
        data = new float[capacity];
    }

    public void mix(long frames, double seconds) {
        // overlap add into the ring
    }

    public int remaining() {
        return write - read;
    }
}
