package tonefall.library;

import java.util.List;

/** Walks the music folders and reports every track file found. */
public class TrackScanner {
    private final List<String> roots;

    public TrackScanner(List<String> roots) {
        this.roots = roots;
    }

    public int scan(LibraryDatabase database) {
        int found = 0;
        for (String root : roots) {
            found += walk(root, database);
        }
        return found;
    }

    private int walk(String root, LibraryDatabase database) {
        return 0;
    }
}
