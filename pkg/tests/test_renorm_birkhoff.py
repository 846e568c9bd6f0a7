"""Tests for the subtraction algebras, the convolution group and the Birkhoff decomposition."""
import sys
from fractions import Fraction
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest

from hopfflow.core.exceptions import CharacterError, DegreeOverflowError, TruncationError
from hopfflow.feynman import ModelData
from hopfflow.graphs.combinatorial import disjoint_union
from hopfflow.graphs.enumeration import enumerate_oriented_graphs
from hopfflow.graphs.io import graph_document
from hopfflow.graphs.library import directed_chain, directed_path, oriented_corolla, theta_graph
from hopfflow.hopf import HopfElement
from hopfflow.hopf.algebra import EMPTY_KEY
from hopfflow.renorm import (
    Character, ComplementaryLaurentAlgebra, CounitMap, LaurentAlgebra, LaurentValue, TableMap,
    birkhoff, convolution, convolution_inverse, convolution_inverse_recursive, convolve,
    make_algebra, make_toy_character, regularized_value, required_weight, rota_baxter_check,
    verify_birkhoff,
)
from hopfflow.renorm.characters import key_of
from hopfflow.schemas.character import CharacterFile


@pytest.fixture
def algebra():
    return LaurentAlgebra(pole_cap=8, regular_cap=8)


@pytest.fixture
def keys():
    """Corolla, chain, three-vertex path and the product chain·corolla."""
    corolla, chain = oriented_corolla(), directed_chain()
    return {
        "corolla": key_of(corolla),
        "chain": key_of(chain),
        "path3": key_of(directed_path(3)),
        "product": key_of(disjoint_union(chain, corolla)),
    }


@pytest.fixture
def chain_character(algebra, keys):
    """φ(corolla) = z^-1 and φ(chain) = z^-1 + 1, extended multiplicatively."""
    return Character(algebra, generators={
        keys["corolla"]: algebra.z(-1),
        keys["chain"]: algebra.z(-1) + 1,
    }, name="chain")


def basis(graph):
    return HopfElement.from_graph(graph)


class TestLaurentValues:
    """Test truncated Laurent arithmetic."""

    def test_arithmetic(self, algebra):
        """Test sums, products and scalars are exact."""
        a = algebra.z(-1) + 2
        b = algebra.z(1, Fraction(1, 2)) - 1
        assert (a * b).coefficients() == {-1: -1, 0: Fraction(1, 2) - 2, 1: 1}
        assert a * 0 == 0
        assert 3 - algebra.one() == 2

    def test_truncation_on_construction(self):
        """Test a coefficient outside the caps is an error, not dropped."""
        with pytest.raises(TruncationError):
            LaurentValue({-3: 1}, pole_cap=2, regular_cap=2)

    def test_truncation_on_product(self):
        """Test a product whose pole exceeds the cap raises."""
        algebra = LaurentAlgebra(pole_cap=3, regular_cap=3)
        with pytest.raises(TruncationError):
            algebra.z(-2) * algebra.z(-2)

    def test_mismatched_caps(self):
        """Test values with different caps cannot be combined."""
        with pytest.raises(TruncationError):
            LaurentValue({0: 1}, 2, 2) + LaurentValue({0: 1}, 3, 3)

    def test_document_round_trip(self, algebra):
        """Test the JSON form keys powers by string."""
        value = algebra.z(-2, Fraction(-1, 3)) + 5
        assert value.to_document() == {"-2": "-1/3", "0": "5"}
        assert LaurentValue.from_document(value.to_document(), 8, 8) == value

    def test_evaluate_pole_at_zero(self, algebra):
        """Test poles cannot be evaluated at z = 0."""
        with pytest.raises(ZeroDivisionError):
            algebra.z(-1).evaluate(0)
        assert (algebra.z(-1) + 1).evaluate(2) == Fraction(3, 2)


class TestSubtractionSchemes:
    """Test the polar projection and augmentations."""

    def test_laurent_split(self, algebra):
        """Test π keeps the pole part and ε_A reads the constant."""
        a = algebra.z(-2) + algebra.z(-1, 3) + 4 + algebra.z(2)
        assert algebra.polar(a) == algebra.z(-2) + algebra.z(-1, 3)
        assert algebra.regular(a) == 4 + algebra.z(2)
        assert algebra.polar(algebra.polar(a)) == algebra.polar(a)
        assert algebra.polar(a) + algebra.regular(a) == a
        assert algebra.augmentation(algebra.regular(a)) == 4

    def test_complementary_split(self):
        """Test the swapped scheme projects onto z C[z] and evaluates at z0."""
        algebra = ComplementaryLaurentAlgebra(4, 4, z0=2)
        a = algebra.z(-1) + 2 + algebra.z(1, 3)
        assert algebra.polar(a) == algebra.z(1, 3)
        assert algebra.augmentation(a) == Fraction(5, 2)

    def test_complementary_needs_nonzero_point(self):
        """Test z0 = 0 is rejected."""
        with pytest.raises(ValueError):
            ComplementaryLaurentAlgebra(z0=0)

    def test_unknown_scheme(self):
        """Test make_algebra rejects unknown schemes."""
        with pytest.raises(ValueError):
            make_algebra("dimensional")


class TestRotaBaxter:
    """Test the Rota-Baxter identity checks."""

    @pytest.fixture
    def samples(self, algebra):
        return [algebra.z(-1), algebra.z(-2) + 1, algebra.z(1) - algebra.z(-1, 2), algebra.one()]

    def test_polar_projection_weight(self, algebra, samples):
        """Test π satisfies the identity with θ = −1."""
        report = rota_baxter_check(algebra.polar, -1, samples)
        assert report.passed
        assert report.pairs_checked == 16

    def test_complementary_projection_weight(self, samples):
        """Test the swapped projection is also of weight −1."""
        algebra = ComplementaryLaurentAlgebra(8, 8)
        values = [algebra.value(s.coefficients()) for s in samples]
        assert rota_baxter_check(algebra.polar, -1, values).passed

    def test_identity_operator(self, samples):
        """Test the identity map satisfies the identity with θ = −1."""
        assert rota_baxter_check(lambda a: a, -1, samples).passed

    def test_wrong_weight(self, algebra, samples):
        """Test θ = +1 fails on f = g = z^-1 and reports the needed weight."""
        report = rota_baxter_check(algebra.polar, 1, samples)
        assert not report.passed
        assert (0, 0) in report.failures
        assert report.required_weights["0,0"] == -1

    def test_required_weight_none(self, algebra):
        """Test no weight fits when the residual is not a multiple of R(fg)."""
        one = algebra.one()
        assert required_weight(lambda a: a * algebra.z(-1), one, one) is None


class TestConvolution:
    """Test the group G(A)."""

    def test_counit_is_identity(self, algebra, chain_character, keys):
        """Test e * φ = φ = φ * e."""
        e = CounitMap(algebra)
        for key in keys.values():
            assert convolution(e, chain_character).on_key(key) == chain_character.on_key(key)
            assert convolution(chain_character, e).on_key(key) == chain_character.on_key(key)

    def test_chain(self, algebra, chain_character):
        """Test (φ*ψ)(chain) = φ(chain) + ψ(chain) + φ(corolla)ψ(corolla)."""
        psi = make_toy_character("edges", algebra)
        value = convolve(chain_character, psi, basis(directed_chain()))
        expected = (algebra.z(-1) + 1) + algebra.z(-1) + algebra.z(-1) * algebra.one()
        assert value == expected

    def test_associative(self, algebra, chain_character, keys):
        """Test (φ*ψ)*χ = φ*(ψ*χ) on the sample classes."""
        psi = make_toy_character("edges", algebra)
        chi = TableMap(algebra, {
            keys["corolla"]: algebra.value({0: 2}),
            keys["chain"]: algebra.z(1),
            keys["path3"]: algebra.z(-1, 5),
            keys["product"]: algebra.value({0: 7}),
            key_of(disjoint_union(oriented_corolla(), oriented_corolla())): algebra.z(-2),
        })
        left = convolution(convolution(chain_character, psi), chi)
        right = convolution(chain_character, convolution(psi, chi))
        for key in keys.values():
            assert left.on_key(key) == right.on_key(key)

    def test_degree_bound(self, chain_character):
        """Test classes above the degree bound are rejected."""
        with pytest.raises(DegreeOverflowError):
            convolve(chain_character, chain_character, basis(directed_chain()), degree_bound=3)


class TestConvolutionInverse:
    """Test φ^{*-1} by the geometric series and by recursion."""

    def test_counit(self, algebra, keys):
        """Test e^{*-1} = e."""
        inverse = convolution_inverse(CounitMap(algebra))
        for key in keys.values():
            assert inverse.on_key(key) == 0

    def test_primitive(self, chain_character, keys):
        """Test φ^{*-1}(corolla) = −φ(corolla)."""
        assert convolution_inverse(chain_character).on_key(keys["corolla"]) == -chain_character.on_key(keys["corolla"])

    def test_chain(self, algebra, chain_character, keys):
        """Test φ^{*-1}(chain) = −φ(chain) + φ(corolla)²."""
        expected = -(algebra.z(-1) + 1) + algebra.z(-2)
        assert convolution_inverse(chain_character).on_key(keys["chain"]) == expected

    def test_methods_agree(self, algebra, keys):
        """Test the geometric series and the recursion give the same inverse."""
        phi = make_toy_character("edges", algebra)
        series = convolution_inverse(phi)
        recursive = convolution_inverse_recursive(phi)
        for key in keys.values():
            assert series.on_key(key) == recursive.on_key(key)

    def test_inverse_property(self, algebra, keys):
        """Test φ^{*-1} * φ = e on every sample class."""
        phi = make_toy_character("edges", algebra)
        product = convolution(convolution_inverse(phi), phi)
        for key in keys.values():
            assert product.on_key(key) == 0


class TestBirkhoff:
    """Test the decomposition φ = φ_-^{*-1} * φ_+."""

    def test_regular_character(self, algebra, keys):
        """Test a regular character has φ_- = e and φ_+ = φ."""
        phi = make_toy_character("unit", algebra)
        result = birkhoff(phi)
        for key in keys.values():
            assert result.minus.on_key(key) == 0
            assert result.plus.on_key(key) == 1

    def test_primitive(self, algebra, chain_character, keys):
        """Test φ(corolla) = z^-1 gives φ_- = −z^-1 and φ_+ = 0."""
        result = birkhoff(chain_character)
        assert result.minus.on_key(keys["corolla"]) == -algebra.z(-1)
        assert result.plus.on_key(keys["corolla"]) == 0

    def test_chain(self, algebra, chain_character, keys):
        """Test one step of the Bogoliubov recursion on the chain."""
        result = birkhoff(chain_character)
        assert result.minus.on_key(keys["chain"]) == algebra.z(-2) - algebra.z(-1)
        assert result.plus.on_key(keys["chain"]) == 1

    def test_verification(self, chain_character, keys):
        """Test reconstruction, containments and multiplicativity."""
        result = birkhoff(chain_character)
        report = verify_birkhoff(result, [keys["corolla"], keys["chain"], keys["product"]])
        assert report.passed
        assert report.classes_checked == 3

    @pytest.mark.parametrize("scheme", ["laurent", "complementary"])
    def test_edges_character(self, scheme, keys):
        """Test the decomposition of the edge-count character in both schemes."""
        phi = make_toy_character("edges", make_algebra(scheme, 8, 8))
        report = verify_birkhoff(birkhoff(phi, degree_bound=10), keys.values())
        assert report.passed

    @pytest.mark.slow
    def test_weight_character(self, algebra):
        """Test z^-|E| times the graph weight on every connected class up to degree 6."""
        model = ModelData.create(["a"], [["1"]], {("a",): 1, ("a", "a"): "1/2", ("a", "a", "a"): 2})
        phi = make_toy_character("weight", algebra, model)
        classes = [
            form.graph for form in enumerate_oriented_graphs(6, connected_only=True)
            if not form.graph.is_empty and max(form.graph.valence(v) for v in form.graph.vertices) <= 3
        ]
        assert len(classes) > 10
        result = birkhoff(phi, degree_bound=6)
        report = verify_birkhoff(result, [key_of(graph) for graph in classes])
        assert report.passed, report
        assert report.classes_checked == len(classes)

    def test_table_map(self, algebra, keys):
        """Test a non-multiplicative element of G(A) decomposes."""
        phi = TableMap(algebra, {
            keys["corolla"]: algebra.z(-1),
            keys["chain"]: algebra.z(-2, 3) + algebra.z(1),
        })
        result = birkhoff(phi)
        assert not result.minus.multiplicative
        assert verify_birkhoff(result, [keys["corolla"], keys["chain"]]).passed

    def test_degree_bound(self, chain_character, keys):
        """Test classes above the bound are rejected."""
        result = birkhoff(chain_character, degree_bound=3)
        with pytest.raises(DegreeOverflowError):
            result.minus.on_key(keys["chain"])


class TestRegularizedValue:
    """Test ε_A(φ_+(x))."""

    def test_regular_value(self, algebra, keys):
        """Test φ(corolla) = 3 + z regularizes to 3."""
        phi = Character(algebra, generators={keys["corolla"]: algebra.z(1) + 3})
        assert regularized_value(birkhoff(phi).plus, basis(oriented_corolla())) == 3

    def test_primitive_pole(self, chain_character):
        """Test φ(corolla) = z^-1 regularizes to 0."""
        assert regularized_value(birkhoff(chain_character).plus, basis(oriented_corolla())) == 0

    def test_chain(self, chain_character):
        """Test the chain regularizes to the constant term of φ_+(chain)."""
        assert regularized_value(birkhoff(chain_character).plus, basis(directed_chain())) == 1

    def test_undefined(self, chain_character):
        """Test a map with a polar part has no regularized value."""
        assert regularized_value(chain_character, basis(directed_chain())) is None


class TestCharacters:
    """Test character construction and the toy rules."""

    def test_edges_rule(self, algebra):
        """Test the edge rule sends the chain to z^-1 and theta to z^-3."""
        phi = make_toy_character("edges", algebra)
        assert phi.on_graph(directed_chain()) == algebra.z(-1)
        assert phi.on_graph(theta_graph()) == algebra.z(-3)

    def test_multiplicative(self, algebra):
        """Test values on products are products of component values."""
        phi = make_toy_character("edges", algebra)
        chain = directed_chain()
        assert phi.on_graph(disjoint_union(chain, directed_path(3))) == algebra.z(-3)
        assert phi(basis(chain) * 2) == algebra.z(-1, 2)

    def test_weight_rule(self, algebra):
        """Test the weight rule multiplies graph_weight into the edge power."""
        model = ModelData.create(["a"], [["1"]], {("a", "a", "a"): 2})
        phi = make_toy_character("weight", algebra, model)
        assert phi.on_graph(theta_graph()) == algebra.z(-3, 4)

    def test_weight_rule_needs_model(self, algebra):
        """Test the weight rule without a model is rejected."""
        with pytest.raises(CharacterError):
            make_toy_character("weight", algebra)

    def test_unknown_rule(self, algebra):
        """Test unknown rule names are rejected."""
        with pytest.raises(CharacterError):
            make_toy_character("loops", algebra)

    def test_missing_generator(self, algebra):
        """Test a character without a rule needs every connected class."""
        phi = Character(algebra, generators={})
        with pytest.raises(CharacterError):
            phi.on_graph(directed_chain())

    def test_table_map_unit(self, algebra, keys):
        """Test a table map sends the empty graph to 1 and needs every other class."""
        with pytest.raises(CharacterError):
            TableMap(algebra, {EMPTY_KEY: algebra.z(-1)})
        with pytest.raises(CharacterError):
            TableMap(algebra, {}).on_key(keys["chain"])


class TestCharacterFiles:
    """Test the character file schema."""

    def test_multiplicative_file(self):
        """Test a multiplicative file builds a character on connected classes."""
        document = CharacterFile.model_validate({
            "degree_bound": 6,
            "values": [{"graph": graph_document(directed_chain()), "laurent": {"-1": 1, "0": "1/2"}}],
        })
        phi = document.to_map()
        assert phi.multiplicative
        chain = directed_chain()
        assert phi.on_graph(disjoint_union(chain, chain)) == phi.on_graph(chain) * phi.on_graph(chain)

    def test_disconnected_generator(self):
        """Test multiplicative files reject values on disconnected graphs."""
        chain = directed_chain()
        document = CharacterFile.model_validate({
            "degree_bound": 8,
            "values": [{"graph": graph_document(disjoint_union(chain, chain)), "laurent": {"0": 1}}],
        })
        with pytest.raises(CharacterError):
            document.to_map()

    def test_table_file(self):
        """Test a non-multiplicative file builds a table map in the chosen scheme."""
        document = CharacterFile.model_validate({
            "degree_bound": 4, "multiplicative": False, "scheme": "complementary", "z0": "2",
            "values": [{"graph": graph_document(oriented_corolla()), "laurent": {"1": 3}}],
        })
        phi = document.to_map()
        assert not phi.multiplicative
        assert phi.algebra.name == "complementary"
        assert phi.on_graph(oriented_corolla()).coefficient(1) == 3
