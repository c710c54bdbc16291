def duration(milliseconds):
    """
    Takes a duration in milliseconds and returns a short human string.
    """
    if milliseconds < 1000:
        return "{:.0f} ms".format(milliseconds)
    seconds = milliseconds / 1000
    if seconds < 60:
        return "{:.1f} s".format(seconds)
    minutes, seconds = divmod(int(round(seconds)), 60)
    return "{}m{:02d}s".format(minutes, seconds)


def flag(value):
    """
    Renders a boolean as the lowercase words used in reports.
    """
    return "true" if value else "false"
