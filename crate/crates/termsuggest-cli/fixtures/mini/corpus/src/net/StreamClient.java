package tonefall.net;

/** Http client for radio and podcast endpoints. */
public class StreamClient {
    private int timeoutMs = 15000;

    public byte[] get(String url) {
        return new byte[0];
    }

    public void setTimeoutMs(int timeoutMs) {
        this.timeoutMs = timeoutMs;
    }
}
