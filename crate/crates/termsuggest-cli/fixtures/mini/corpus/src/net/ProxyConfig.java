package tonefall.net;

/** Proxy settings applied to every outgoing connection. */
public class ProxyConfig {
    private String host = "";
    private int port;

    public void setProxy(String host, int port) {
        this.host = host;
        this.port = port;
    }

    public boolean proxyEnabled() {
        return !host.isEmpty();
    }

    public String proxyHost() {
        return host;
    }
}
