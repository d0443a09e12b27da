package tonefall.core;

import java.util.Properties;

/** Flat key value settings file. */
public class ConfigStore {
    private final Properties props = new Properties();

    public String get(String key, String fallback) {
        return props.getProperty(key, fallback);
    }

    public void put(String key, String value) {
        props.setProperty(key, value);
    }
}
