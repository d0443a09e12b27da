package tonefall.library;

import java.util.HashSet;
import java.util.Set;

/** Flags tracks that appear twice under different paths. */
public class DuplicateFinder {
    public Set<String> duplicates(Iterable<String> fingerprints) {
        Set<String> seen = new HashSet<>();
        Set<String> twice = new HashSet<>();
        for (String print : fingerprints) {
            if (!seen.add(print)) {
                twice.add(print);
            }
        }
        return twice;
    }
}
