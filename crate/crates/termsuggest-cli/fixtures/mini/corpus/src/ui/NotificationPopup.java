package tonefall.ui;

/** Small toast shown on track change. */
public class NotificationPopup {
    private int durationMs = 2500;

    public void showTrackChange(String title, String artist) {
        // toast fades after durationMs
    }

    public void setDurationMs(int durationMs) {
        this.durationMs = durationMs;
    }
}
