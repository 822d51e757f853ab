import pytest

from bhdual.coxeter import NotARoot
from bhdual.curveconf import build_configuration
from bhdual.fixtures import load_rows, row_by_name
from bhdual.klattice import (
    CaseMismatch,
    MukaiClass,
    Sheaf,
    UnknownNode,
    class_of,
    generator_list,
    gram_matrix,
    mukai_pairing,
    reflect,
    row_gram,
)
from bhdual.series import transpose_monodromy


def conf_for(name):
    return build_configuration(row_by_name(name))


class TestPairing:
    def test_structure_sheaf_is_spherical(self):
        conf = conf_for("S_16")
        ox = class_of(Sheaf("OX"), conf)
        assert mukai_pairing(ox, ox, conf) == -2

    def test_adjacent_line_bundles(self):
        conf = conf_for("S_16")
        c = class_of(Sheaf("OC-1", ("E2_1",)), conf)
        d = class_of(Sheaf("OC-1", ("E2_2",)), conf)
        assert mukai_pairing(c, d, conf) == 1

    def test_ox_vs_twisted_line_bundle(self):
        conf = conf_for("S_16")
        ox = class_of(Sheaf("OX"), conf)
        c = class_of(Sheaf("OC-1", ("E2_1",)), conf)
        assert mukai_pairing(ox, c, conf) == 0

    def test_ox_vs_structure_sheaf_of_curve(self):
        conf = conf_for("S_16")
        ox = class_of(Sheaf("OX"), conf)
        oc = class_of(Sheaf("OC", ("Einf",)), conf)
        assert mukai_pairing(ox, oc, conf) == -1

    def test_central_pair(self):
        conf = conf_for("S_16")
        a = class_of(Sheaf("OC-1", ("Einf",)), conf)
        b = class_of(Sheaf("OC", ("Einf",)), conf)
        assert mukai_pairing(a, b, conf) == -2


class TestClassOf:
    def test_twist_class(self):
        conf = conf_for("E_20")
        tw = class_of(Sheaf("TW", ("E3_1", "E3_2")), conf)
        assert tw.rank == 0 and tw.degree == 0
        assert mukai_pairing(tw, tw, conf) == -2
        assert sum(tw.divisor) == 2

    def test_shift_negates(self):
        conf = conf_for("E_20")
        ox = class_of(Sheaf("OX"), conf)
        shifted = class_of(Sheaf("OX[1]"), conf)
        assert shifted == -ox
        assert (shifted.rank, shifted.degree) == (-1, -1)

    def test_unknown_node(self):
        conf = conf_for("S_16")
        with pytest.raises(UnknownNode):
            class_of(Sheaf("OC", ("E9_9",)), conf)


class TestGeneratorList:
    def test_counts_match_milnor_number(self):
        for row in load_rows():
            conf = build_configuration(row)
            gens = generator_list(row, conf)
            assert len(gens) == row.mu == transpose_monodromy(row).degree, row.name

    def test_selected_counts(self):
        assert len(generator_list(row_by_name("S_16"), conf_for("S_16"))) == 16
        assert len(generator_list(row_by_name("E_20"), conf_for("E_20"))) == 20
        assert len(generator_list(row_by_name("Z_1,0"), conf_for("Z_1,0"))) == 15

    def test_every_generator_is_a_root(self):
        for row in load_rows():
            conf = build_configuration(row)
            gens = generator_list(row, conf)
            for cls in gens.classes:
                assert mukai_pairing(cls, cls, conf) == -2

    def test_case_mismatch(self):
        with pytest.raises(CaseMismatch):
            generator_list(row_by_name("E_20"), conf_for("S_16"))

    def test_listing_order(self):
        gens = generator_list(row_by_name("E_20"), conf_for("E_20"))
        names = gens.descriptors
        assert names[0] == "O_E1_1(-1)"
        assert names[3] == "T_E3_1(E3_2)"
        assert names[-6:] == (
            "O_X[1]",
            "O_F1",
            "O_F2(-1)",
            "O_F3(-1)",
            "O_F4(-1)",
            "O_E0(-1)",
        )

    def test_two_component_tail(self):
        # the calibrated dictionary for the two-component case: one plain
        # structure sheaf and one (-1)-twisted
        gens = generator_list(row_by_name("Z_1,0"), conf_for("Z_1,0"))
        assert gens.descriptors[-3:] == ("O_X", "O_E0p", "O_E0pp(-1)")
        assert gens.descriptors[4] == "T_E3_1(E3_2)"


class TestGramMatrix:
    def test_arm_block(self):
        conf = conf_for("S_16")
        gens = generator_list(row_by_name("S_16"), conf)
        gram = gram_matrix(gens, conf)
        # two adjacent arm curves
        assert (gram[0, 0], gram[0, 1], gram[1, 1]) == (-2, 1, -2)

    def test_central_entries(self):
        conf = conf_for("S_16")
        gens = generator_list(row_by_name("S_16"), conf)
        gram = gram_matrix(gens, conf)
        names = gens.descriptors
        i = names.index("O_Einf(-1)")
        j = names.index("O_Einf")
        k = names.index("O_X")
        assert gram[i, j] == -2
        assert gram[k, j] == -1

    def test_symmetric_diagonal_and_range(self):
        for row in load_rows():
            gram, gens, conf = row_gram(row)
            entries = gram.entries
            assert gram.is_symmetric()
            assert all(entries[i][i] == -2 for i in range(gram.dim))
            off = {
                entries[i][j]
                for i in range(gram.dim)
                for j in range(gram.dim)
                if i != j
            }
            assert off <= {-2, -1, 0, 1}, row.name


class TestReflect:
    def test_negates_axis(self):
        conf = conf_for("S_16")
        e = class_of(Sheaf("OC-1", ("E1_1",)), conf)
        assert reflect(e, e, conf) == -e

    def test_reflection_realizes_twist(self):
        conf = conf_for("E_20")
        b = class_of(Sheaf("OC-1", ("E3_1",)), conf)
        c = class_of(Sheaf("OC-1", ("E3_2",)), conf)
        assert mukai_pairing(c, b, conf) == 1
        assert reflect(c, b, conf) == class_of(Sheaf("TW", ("E3_1", "E3_2")), conf)

    def test_orthogonal_fixed(self):
        conf = conf_for("S_16")
        e = class_of(Sheaf("OC-1", ("E1_1",)), conf)
        x = class_of(Sheaf("OC-1", ("E2_1",)), conf)
        assert mukai_pairing(x, e, conf) == 0
        assert reflect(x, e, conf) == x

    def test_involution_and_isometry(self):
        row = row_by_name("W_18")
        conf = build_configuration(row)
        gens = generator_list(row, conf)
        classes = gens.classes
        root = classes[5]
        images = [reflect(v, root, conf) for v in classes]
        for v, iv in zip(classes, images):
            assert reflect(iv, root, conf) == v
        for i, v in enumerate(classes):
            for j, w in enumerate(classes):
                assert mukai_pairing(images[i], images[j], conf) == mukai_pairing(v, w, conf)

    def test_not_a_root(self):
        conf = conf_for("S_16")
        e = class_of(Sheaf("OC-1", ("E1_1",)), conf)
        not_root = MukaiClass(0, tuple(0 for _ in conf.labels), 5)
        with pytest.raises(NotARoot):
            reflect(e, not_root, conf)


class TestBaseChange:
    def test_twist_preserves_pairings_against_other_generators(self):
        """Replacing the two outermost arm-3 classes by the twist class leaves
        every pairing with the remaining generators unchanged in total."""
        row = row_by_name("E_20")
        conf = build_configuration(row)
        b = class_of(Sheaf("OC-1", ("E3_1",)), conf)
        c = class_of(Sheaf("OC-1", ("E3_2",)), conf)
        tw = class_of(Sheaf("TW", ("E3_1", "E3_2")), conf)
        gens = generator_list(row, conf)
        for sheaf, v in gens.items:
            if str(sheaf) in ("T_E3_1(E3_2)",):
                continue
            assert mukai_pairing(tw, v, conf) == mukai_pairing(b, v, conf) + mukai_pairing(
                c, v, conf
            )
