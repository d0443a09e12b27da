package tonefall.search;

import java.util.ArrayList;
import java.util.List;

/** Applies search filters in order. */
public class FilterChain {
    private final List<Object> filters = new ArrayList<>();

    public void append(Object filter) {
        filters.add(filter);
    }

    public int size() {
        return filters.size();
    }
}
