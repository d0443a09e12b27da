package tonefall.ui;

import java.util.HashMap;
import java.util.Map;

/** Keyboard shortcut table. */
public class ShortcutMap {
    private final Map<String, String> bindings = new HashMap<>();

    public void bind(String keys, String action) {
        bindings.put(keys, action);
    }

    public String actionFor(String keys) {
        return bindings.get(keys);
    }
}
