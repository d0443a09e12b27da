package tonefall.codec;

/** Low level id3 and vorbis comment parsing. */
public class TagParser {
    public String field(byte[] tag, String name) {
        return "";
    }

    public boolean hasAlbumArt(byte[] tag) {
        return false;
    }
}
