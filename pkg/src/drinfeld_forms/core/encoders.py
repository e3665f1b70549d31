import json
import math

from ..algebra import PolyA, RatK, USeries


def canonical_number(value):
    """Integers pass through, infinities become the strings "inf" and "-inf" """
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value


class CustomJsonEncoder(json.JSONEncoder):
    def default(self, o):
        if isinstance(o, JSONSerializable):
            return o.to_dict()
        if isinstance(o, (PolyA, RatK)):
            return o.to_text()
        if isinstance(o, USeries):
            return o.to_texts()
        return json.JSONEncoder.default(self, o)

    def iterencode(self, o, _one_shot=False):
        return super().iterencode(_sanitize(o), _one_shot)


def _sanitize(value):
    """Replaces infinite floats before the encoder sees them"""
    if isinstance(value, float):
        return canonical_number(value)
    if isinstance(value, dict):
        return {k: _sanitize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_sanitize(v) for v in value]
    if isinstance(value, JSONSerializable):
        return _sanitize(value.to_dict())
    return value


class JSONSerializable(object):
    ''' Allows for an object to be represented in JSON format '''

    def to_dict(self, ignore_private_fields=True, skip_null=True):
        ''' Returns the public fields of the object as a dictionary '''

        sanitized_results = dict(self.__dict__)

        # Remove any fields that are None, or [] or {}
        if skip_null:
            sanitized_results = {k: v for k, v in sanitized_results.items()
                                 if not (v is None or (isinstance(v, (list, dict)) and not v))
                                 }

        # Ignore any fields that are private to the class
        if ignore_private_fields:
            sanitized_results = {k: v for k, v in sanitized_results.items()
                                 if not k.startswith("_")
                                 }

        return sanitized_results

    def jsonify(self, ignore_private_fields=True, skip_null=True, indent=4):
        ''' Returns a json string of the object '''
        return json.dumps(self.to_dict(ignore_private_fields, skip_null),
                          sort_keys=True, indent=indent, cls=CustomJsonEncoder)


def dumps(value, indent=4) -> str:
    """Canonical JSON text: sorted keys, infinities as strings"""
    return json.dumps(value, sort_keys=True, indent=indent, cls=CustomJsonEncoder)
