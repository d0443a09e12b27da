package tonefall.library;

import java.util.Map;
import java.util.TreeMap;

/** Groups tracks into albums and keeps the album list sorted. */
public class AlbumIndex {
    private final Map<String, Integer> albums = new TreeMap<>();

    public void addTrack(String album) {
        albums.merge(album, 1, Integer::sum);
    }

    public int albumCount() {
        return albums.size();
    }

    public int trackCount(String album) {
        return albums.getOrDefault(album, 0);
    }
}
