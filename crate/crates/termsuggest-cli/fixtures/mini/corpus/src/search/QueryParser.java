package tonefall.search;

/** Parses the search box syntax: artist:, album:, rating:. */
public class QueryParser {
    public String[] terms(String raw) {
        return raw.trim().split("\\s+");
    }

    public boolean hasField(String raw, String field) {
        return raw.contains(field + ":");
    }
}
