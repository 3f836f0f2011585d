import pytest

from lielike import (
    CONSTRUCTIONS,
    GeneratorSpec,
    check_algebra,
    check_module,
    generate,
    is_solvable,
    is_trivial,
)
from lielike.serialize import (
    dumps,
    instance_from_json,
    instance_to_json,
)


class TestGeneratorSpec:
    def test_rejects_unknown_construction(self):
        with pytest.raises(ValueError):
            GeneratorSpec("moebius", 2, 1, 0)

    def test_rejects_bad_shape(self):
        with pytest.raises(ValueError):
            GeneratorSpec("abelian", -1, 1, 0)
        with pytest.raises(ValueError):
            GeneratorSpec("abelian", 2, 0, 0)


class TestConstructions:
    @pytest.mark.parametrize("construction", CONSTRUCTIONS)
    def test_always_valid_and_solvable(self, construction):
        for dim in (1, 3, 4):
            for s in (1, 2):
                inst = generate(GeneratorSpec(construction, dim, s, seed=7))
                assert check_algebra(inst.algebra) == []
                assert is_solvable(inst.algebra)[0]
                assert check_module(inst.module) == []

    def test_abelian_is_zero(self):
        inst = generate(GeneratorSpec("abelian", 3, 2, 0))
        assert all(
            all(all(x == 0 for x in v) for v in row)
            for ck in inst.algebra.c
            for row in ck
        )
        assert is_solvable(inst.algebra) == (True, 2)

    def test_scaled_bundle_is_trivial(self):
        inst = generate(GeneratorSpec("scaled-leibniz-bundle", 4, 3, 2))
        ok, _ = is_trivial(inst.algebra)
        assert ok

    def test_graded_nilpotent_shape(self):
        inst = generate(GeneratorSpec("graded-nilpotent", 3, 2, 1, 1))
        n1 = 2  # upper grade occupies the first (n+1)//2 coordinates
        for ck in inst.algebra.c:
            for i, row in enumerate(ck):
                for j, v in enumerate(row):
                    if i < n1 or j < n1:
                        assert all(x == 0 for x in v)
                    else:
                        assert all(x == 0 for x in v[n1:])

    def test_direct_sum_doubles_the_space(self):
        inst = generate(GeneratorSpec("direct-sum", 3, 2, 0))
        assert inst.module.vdim == 6

    def test_basis_change_hides_the_grading(self):
        inst = generate(GeneratorSpec("basis-changed", 4, 2, 5))
        assert inst.module.vdim == 4
        assert check_module(inst.module) == []

    def test_metadata_records_the_spec(self):
        inst = generate(GeneratorSpec("abelian", 2, 1, 9))
        assert inst.metadata["construction"] == "abelian"
        assert inst.metadata["seed"] == 9


class TestDeterminism:
    @pytest.mark.parametrize("construction", CONSTRUCTIONS)
    def test_byte_identical_json(self, construction):
        spec = GeneratorSpec(construction, 4, 2, 3)
        payloads = {
            dumps(
                instance_to_json(
                    inst.algebra, inst.module, inst.metadata
                )
            )
            for inst in (generate(spec), generate(spec), generate(spec))
        }
        assert len(payloads) == 1

    def test_different_seeds_differ(self):
        a = generate(GeneratorSpec("graded-nilpotent", 4, 2, 0))
        b = generate(GeneratorSpec("graded-nilpotent", 4, 2, 1))
        assert a.algebra != b.algebra


class TestRoundTrip:
    @pytest.mark.parametrize("construction", CONSTRUCTIONS)
    def test_serialize_roundtrip(self, construction):
        inst = generate(GeneratorSpec(construction, 3, 2, 4))
        obj = instance_to_json(inst.algebra, inst.module, inst.metadata)
        L, M, meta = instance_from_json(obj)
        assert L == inst.algebra
        assert M == inst.module
        assert meta == inst.metadata
