package tonefall.net;

import java.util.List;

/** Browsable list of public radio stations. */
public class RadioDirectory {
    public List<String> stations(String country) {
        // the station list refresh happens at most once an hour
        return List.of();
    }
}
