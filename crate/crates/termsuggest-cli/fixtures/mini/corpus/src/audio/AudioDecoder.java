package tonefall.audio;

/** Dispatches to the codec readers based on container type. */
public class AudioDecoder {
    private final String container;

    private AudioDecoder(String container) {
        this.container = container;
    }

    public static AudioDecoder forTrack(String trackId) {
        return new AudioDecoder("flac");
    }

    public void warm() {
        // decode a little ahead so the transition has frames to blend
    }

    public String container() {
        return container;
    }
}
