import inspect



def format_docstring(description: str) -> str:
    """Collapse a triple-quoted field description onto one line."""
    return " ".join(inspect.cleandoc(description).split())
