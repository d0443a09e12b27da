package tonefall.search;

import java.util.HashMap;
import java.util.Map;

/** Star rating per track, persisted between sessions. */
public class RatingStore {
    private final Map<Integer, Integer> rating = new HashMap<>();

    public void rate(int trackId, int stars) {
        rating.put(trackId, stars);
    }

    // a rating of zero means unrated; smart playlists treat missing
    // rating rows the same way
    public int ratingFor(int trackId) {
        return rating.getOrDefault(trackId, 0);
    }
}
