package tonefall.net;

import java.util.ArrayDeque;
import java.util.Deque;

/** Batches play counts and submits them to the scrobbling service. */
public class ScrobbleUploader {
    private final Deque<String> pending = new ArrayDeque<>();

    public void enqueue(String trackId) {
        pending.add(trackId);
        // offline plays stay queued until the scrobbling thread wakes
    }

    public int flush() {
        int sent = pending.size();
        pending.clear();
        // scrobbling stops when the worker thread dies after suspend
        return sent;
    }
}
