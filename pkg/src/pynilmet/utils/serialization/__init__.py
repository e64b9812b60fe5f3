from pynilmet.utils.serialization.deserializer import (
    Deserializer,
    ParsedDocument,
    load,
    parse_document,
)
from pynilmet.utils.serialization.serializer import (
    SerializationError,
    Serializer,
    document,
    dump,
    emit_document,
)

__all__ = [
    "Deserializer",
    "ParsedDocument",
    "SerializationError",
    "Serializer",
    "document",
    "dump",
    "emit_document",
    "load",
    "parse_document",
]
