package tonefall.library;

/** Guides a first import of an existing music folder. */
public class ImportWizard {
    private final TrackScanner scanner;
    private final LibraryDatabase database;

    public ImportWizard(TrackScanner scanner, LibraryDatabase database) {
        this.scanner = scanner;
        this.database = database;
    }

    public int runImport() {
        int found = scanner.scan(database);
        database.vacuum();
        return found;
    }
}
