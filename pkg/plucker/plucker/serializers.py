"""
This module defines the JSON serializers of Plücker vectors, traces and
reconstruction results.

Integers are written as decimal strings so that they survive any JSON
parser; both decimal strings and JSON integers are accepted on input.
``is_valid()`` only checks the structure of a document; the value types and
their invariants are built by ``save()``.
"""
import json
import re

from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

from plucker.exceptions import PluckerValidationError
from plucker.models import (
    DESCRIPTOR,
    STAGE,
    Descriptor,
    LatticeMatrix,
    PluckerVector,
    Trace,
    TraceStep,
    UnimodularTransform,
)
from plucker.reconstruct import ReconstructionResult

INTEGER = re.compile(r"[+-]?\d+")


class IntegerStringField(serializers.Field):
    """An arbitrary precision integer, represented as a decimal string."""

    default_error_messages = {"invalid": "A decimal integer is required."}

    def to_representation(self, value):
        return str(int(value))

    def to_internal_value(self, data):
        if isinstance(data, bool):
            self.fail("invalid")
        if isinstance(data, int):
            return data
        if isinstance(data, str) and INTEGER.fullmatch(data.strip()):
            return int(data.strip())
        self.fail("invalid")


def matrix_field(**kwargs):
    return serializers.ListField(
        child=serializers.ListField(child=IntegerStringField(), allow_empty=False),
        allow_empty=False,
        **kwargs,
    )


def _build(factory, *args, **kwargs):
    try:
        return factory(*args, **kwargs)
    except PluckerValidationError:
        raise
    except (TypeError, ValueError) as e:
        raise PluckerValidationError(str(e))


class PluckerVectorSerializer(serializers.Serializer):
    k = serializers.IntegerField(min_value=1)
    n = serializers.IntegerField(min_value=1)
    entries = serializers.ListField(child=IntegerStringField())

    def create(self, validated_data):
        return _build(PluckerVector, **validated_data)


class LatticeMatrixSerializer(serializers.Serializer):
    matrix = matrix_field(source="rows")

    def create(self, validated_data):
        return _build(LatticeMatrix, validated_data["rows"])


class DescriptorSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=DESCRIPTOR)
    params = serializers.ListField(child=IntegerStringField(), required=False)


class TraceStepSerializer(serializers.Serializer):
    label = serializers.ChoiceField(choices=STAGE, source="stage_label")
    n = serializers.IntegerField(min_value=1, source="ambient_n")
    matrix = matrix_field(source="transform.matrix")
    descriptor = DescriptorSerializer(source="transform.descriptor", required=False)

    @staticmethod
    def build(data) -> TraceStep:
        transform = data["transform"]
        descriptor = transform.get("descriptor")
        if descriptor is None:
            descriptor = Descriptor(DESCRIPTOR.General)
        else:
            descriptor = _build(
                Descriptor, descriptor["kind"], descriptor.get("params", ())
            )
        transform = _build(
            UnimodularTransform, data["ambient_n"], transform["matrix"], descriptor
        )
        return _build(TraceStep, transform, data["stage_label"], data["ambient_n"])


class TraceSerializer(serializers.Serializer):
    """
    Serializes a :class:`~plucker.models.Trace`:
    ::

        {"k": 2, "n": 4, "steps": [{"label": .., "n": .., "matrix": [[..]],
         "descriptor": {"kind": .., "params": [..]}}, ..], "p_hat": "1"}
    """

    k = serializers.IntegerField(min_value=1)
    n = serializers.IntegerField(min_value=1, source="n_initial")
    steps = TraceStepSerializer(many=True)
    p_hat = IntegerStringField(source="terminal_p_hat", allow_null=True, required=False)

    def create(self, validated_data):
        steps = [TraceStepSerializer.build(step) for step in validated_data["steps"]]
        trace = _build(Trace, validated_data["k"], validated_data["n_initial"])
        trace = trace.extend(steps)
        p_hat = validated_data.get("terminal_p_hat")
        return trace if p_hat is None else trace.finish(p_hat)


class ReconstructionResultSerializer(serializers.Serializer):
    matrix = matrix_field(source="matrix.rows")
    p_hat = IntegerStringField()
    index = IntegerStringField(source="sublattice_index")

    def create(self, validated_data):
        matrix = _build(LatticeMatrix, validated_data["matrix"]["rows"])
        return ReconstructionResult(
            matrix, validated_data["p_hat"], validated_data["sublattice_index"]
        )


class CheckSerializer(serializers.Serializer):
    name = serializers.CharField()
    passed = serializers.BooleanField()
    detail = serializers.CharField(allow_blank=True)


class VerificationReportSerializer(serializers.Serializer):
    passed = serializers.BooleanField()
    checks = CheckSerializer(many=True)


class RunSerializer(serializers.Serializer):
    """The document written by the ``run`` command and read by ``verify``."""

    plucker = PluckerVectorSerializer()
    trace = TraceSerializer()
    result = ReconstructionResultSerializer(required=False)


def render(data) -> str:
    """Indented, deterministic JSON text of serialized data."""
    return JSONRenderer().render(data, renderer_context={"indent": 2}).decode() + "\n"


def _parse(text: str):
    try:
        return json.loads(text)
    except ValueError as e:
        raise PluckerValidationError(f"invalid JSON: {e}")


def _validated(data, serializer_class, **kwargs):
    serializer = serializer_class(data=data, **kwargs)
    if not serializer.is_valid():
        raise PluckerValidationError(f"invalid document: {serializer.errors}")
    return serializer


def load(text: str, serializer_class, **kwargs):
    """
    Parses and validates a JSON document.

    :returns: the bound serializer, valid
    :raises PluckerValidationError: if the text is not JSON or the document
        does not have the expected structure
    """
    return _validated(_parse(text), serializer_class, **kwargs)


def load_trace_document(text: str):
    """
    Validates either a bare trace document or a run document.

    :returns: the validated data of the trace, the Plücker vector and the
        result, the last two ``None`` for a bare trace
    """
    data = _parse(text)
    if isinstance(data, dict) and "trace" in data:
        validated = _validated(data, RunSerializer).validated_data
        return validated["trace"], validated["plucker"], validated.get("result")
    return _validated(data, TraceSerializer).validated_data, None, None
