package tonefall.ui;

/** Shell window hosting the queue, the library and the toolbar. */
public class MainWindow {
    private final QueueView queue = new QueueView();
    private boolean maximized;

    public void show() {
        queue.refresh();
    }

    public void toggleMaximized() {
        maximized = !maximized;
    }

    public QueueView queueView() {
        return queue;
    }
}
