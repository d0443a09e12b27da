package tonefall.sync;

/** Detects portable devices appearing on the usb bus. */
public class UsbProbe {
    public boolean present(String deviceId) {
        // a flaky usb cable shows up as rapid attach and detach events;
        // debounce the cable events before declaring the device gone
        return true;
    }

    public String mountPoint(String deviceId) {
        return "/media/" + deviceId;
    }
}
