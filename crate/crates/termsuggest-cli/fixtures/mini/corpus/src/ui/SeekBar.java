package tonefall.ui;

/** Position control with chapter ticks. */
public class SeekBar {
    private double position;

    public void seekTo(double fraction) {
        position = Math.min(1.0, Math.max(0.0, fraction));
    }

    public double position() {
        return position;
    }
}
