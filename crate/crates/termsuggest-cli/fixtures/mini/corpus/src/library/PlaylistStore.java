package tonefall.library;

import java.util.ArrayList;
import java.util.List;

/** Persists ordinary playlists; smart ones live in the search package. */
public class PlaylistStore {
    private final List<String> playlists = new ArrayList<>();

    public void savePlaylist(String name) {
        playlists.add(name);
    }

    public List<String> playlistNames() {
        return playlists;
    }

    public void deletePlaylist(String name) {
        playlists.remove(name);
    }
}
