package tonefall.library;

/** Single sqlite handle behind the library. */
public class LibraryDatabase {
    private final String path;

    public LibraryDatabase(String path) {
        this.path = path;
    }

    public void insertTrack(String file, String album) {
        // upsert keyed by file path
    }

    public void vacuum() {
        // compact after large imports
    }
}
