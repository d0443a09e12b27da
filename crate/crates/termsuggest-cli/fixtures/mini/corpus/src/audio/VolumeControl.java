package tonefall.audio;

/** Applies replaygain and the volume normalization stage. */
public class VolumeControl {
    private double gainDb;
    private boolean normalization = true;

    // normalization clips loud passages when the source gain is hot;
    // the limiter should engage before a clip is audible
    public float apply(float sample) {
        float scaled = (float) (sample * Math.pow(10.0, gainDb / 20.0));
        if (normalization && Math.abs(scaled) > 0.98f) {
            scaled = clamp(scaled);
        }
        return scaled;
    }

    private float clamp(float sample) {
        return Math.max(-0.98f, Math.min(0.98f, sample));
    }

    public void setReplaygain(double db) {
        this.gainDb = db;
    }

    public void setNormalization(boolean on) {
        this.normalization = on;
    }
}
