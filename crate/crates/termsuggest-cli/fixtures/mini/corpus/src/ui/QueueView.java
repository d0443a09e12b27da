package tonefall.ui;

/** Scrollable list of the upcoming tracks. */
public class QueueView {
    private int visibleRows = 20;

    public void refresh() {
        // refresh redraws the visible rows only
    }

    public void scrollTo(int row) {
        visibleRows = Math.max(visibleRows, row);
    }
}
