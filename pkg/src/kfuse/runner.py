"""Initialize and run the kfuse application."""
import pyrebar


def run():
    rc = pyrebar.main(plugin_prefix="kfuse")
    return rc
