package tonefall.search;

import java.util.HashMap;
import java.util.Map;

/** Token index over titles, artists and albums. */
public class SearchIndex {
    private final Map<String, int[]> postings = new HashMap<>();

    public void add(int trackId, String text) {
        // lowercase tokens, no stemming
    }

    public int[] lookup(String token) {
        return postings.getOrDefault(token, new int[0]);
    }
}
