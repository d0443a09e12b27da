package tonefall.search;

import java.util.List;

/** A smart playlist materializes a saved query instead of a track list. */
public class SmartPlaylist {
    private final List<String> ruleSet;

    public SmartPlaylist(List<String> ruleSet) {
        this.ruleSet = ruleSet;
    }

    // the smart playlist re evaluates its rules when the library changes;
    // rating rules read the rating store lazily, so a missing store row
    // quietly drops that rule from the playlist
    public List<String> materialize() {
        return List.of();
    }

    public List<String> rules() {
        return ruleSet;
    }
}
