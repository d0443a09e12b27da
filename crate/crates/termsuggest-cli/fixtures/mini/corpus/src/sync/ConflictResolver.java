package tonefall.sync;

/** Decides which side wins when both the device and the library changed. */
public class ConflictResolver {
    public String resolve(String local, String remote) {
        // newest metadata wins; sync never deletes on conflict
        return local.compareTo(remote) >= 0 ? local : remote;
    }
}
