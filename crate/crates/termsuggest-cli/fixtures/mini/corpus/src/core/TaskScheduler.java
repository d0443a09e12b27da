package tonefall.core;

import java.util.Timer;
import java.util.TimerTask;

/** Runs periodic jobs like library rescans. */
public class TaskScheduler {
    private final Timer timer = new Timer("jobs", true);

    public void every(long periodMs, Runnable job) {
        timer.scheduleAtFixedRate(new TimerTask() {
            public void run() {
                job.run();
            }
        }, periodMs, periodMs);
    }
}
