__version__ = "0.1.0"
TOOL_ID = f"noisyins {__version__}"
