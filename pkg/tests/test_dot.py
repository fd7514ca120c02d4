from __future__ import annotations

import pytest

from kcut import DomainError, decompose
from kcut.dot import export_dot

from helpers import F1, F3


def test_dot_is_byte_stable_and_shapes_boundaries():
    one = export_dot(F1)
    assert one == export_dot(F1)
    assert '"w1" [shape=diamond];' in one
    assert '"e1" [shape=box];' in one
    assert '"m" [shape=ellipse];' in one
    assert one.count("->") == 3
    assert "dotted" not in one


def test_dot_styles_transversal_edges_dotted():
    text = export_dot(F3, decompose(F3))
    assert '"p" -> "q" [style=dotted];' in text
    assert '"w" -> "p" [style=solid];' in text
    assert text.count("dotted") == 1


def test_dot_with_degenerate_decomposition_is_all_solid():
    text = export_dot(F1, decompose(F1))
    assert "dotted" not in text
    assert text.count("solid") == 3


def test_dot_rejects_foreign_decompositions():
    with pytest.raises(DomainError, match="belong"):
        export_dot(F1, decompose(F3))
