"""seq: products, summations, the Γ transform, fits, norms and Rota-Baxter reports."""
import argparse

from hopfflow.cli.output import CommandResult
from hopfflow.schemas.sequence import PolynomialFile, SequenceFile
from hopfflow.sequences.algebra import seq_product
from hopfflow.sequences.fitting import asymptotic_fit
from hopfflow.sequences.gamma import gamma_transform
from hopfflow.sequences.norms import levin_norm
from hopfflow.sequences.summation import SUM_KINDS, random_samples, rota_baxter_report, sum_operator
from hopfflow.utils.files import load_model


def _sequence(path: str):
    return load_model(path, SequenceFile).to_sequence()


def _sequence_result(sequence) -> CommandResult:
    document = sequence.to_document()
    return CommandResult(document=document, text=" ".join(str(x) for x in document["entries"]))


def product_command(args: argparse.Namespace) -> CommandResult:
    return _sequence_result(seq_product(_sequence(args.input), _sequence(args.other), args.mode))


def sum_command(args: argparse.Namespace) -> CommandResult:
    kind = "prime" if args.prime else "strict" if args.strict else "partial"
    return _sequence_result(sum_operator(kind)(_sequence(args.input)))


def gamma_command(args: argparse.Namespace) -> CommandResult:
    polynomial = load_model(args.input, PolynomialFile).to_polynomial()
    q = gamma_transform(polynomial, args.order)
    document = q.to_document()
    text = f"Q(t) = {q.as_expr()}"
    if args.numeric:
        numeric = q.numeric()
        document = {"symbolic": document, "numeric": [float(c) for c in numeric.coeffs]}
        text += f"\n     ≈ {numeric.as_expr()}"
    return CommandResult(document=document, text=text)


def fit_command(args: argparse.Namespace) -> CommandResult:
    report = asymptotic_fit(_sequence(args.input), args.degree, args.window_start)
    terms = " + ".join(f"{c:.10g} t^{k}" for k, c in enumerate(report.coefficients))
    text = "\n".join([
        f"P(t) ≈ {terms}",
        f"window {report.window}, residual rms {report.residual_rms:.3g}, "
        f"{'decaying' if report.residual_decaying else 'not decaying'}",
        f"condition number {report.condition_number:.3g}" + (" (ill-conditioned)" if report.ill_conditioned else ""),
    ])
    return CommandResult(document=report.to_document(), text=text, exit_code=1 if report.ill_conditioned else 0)


def norm_command(args: argparse.Namespace) -> CommandResult:
    value = levin_norm(_sequence(args.input))
    return CommandResult(document={"norm": value}, text=str(value))


def rota_baxter_command(args: argparse.Namespace) -> CommandResult:
    samples = random_samples(args.samples, args.length, args.seed)
    report = rota_baxter_report(args.kind, samples, args.product, args.theta)
    document = {**report.model_dump(), "passed": report.passed}
    text = (f"{args.kind} sum, weight {report.theta} on ({args.product}): "
            + ("holds" if report.passed else f"fails on {len(report.failures)} of {report.pairs_checked} pairs"))
    return CommandResult(document=document, text=text, exit_code=0 if report.passed else 1)


def register(subparsers) -> None:
    parser = subparsers.add_parser("seq", help="Sequence algebras and regularized sums")
    commands = parser.add_subparsers(dest="action", required=True)

    p = commands.add_parser("product", help="Product of two sequences")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--with", dest="other", required=True)
    p.add_argument("--mode", choices=["pointwise", "maxconv", "cauchy"], default="pointwise")
    p.set_defaults(handler=product_command)

    p = commands.add_parser("sum", help="Partial sums; --prime shifts by one, --strict drops the diagonal")
    p.add_argument("--in", dest="input", required=True)
    variant = p.add_mutually_exclusive_group()
    variant.add_argument("--prime", action="store_true")
    variant.add_argument("--strict", action="store_true")
    p.set_defaults(handler=sum_command)

    p = commands.add_parser("gamma", help="Apply Γ(1 + d/dt) to a polynomial")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--numeric", action="store_true", help="Also substitute numeric constants")
    p.set_defaults(handler=gamma_command)

    p = commands.add_parser("fit", help="Fit S(f)_N against powers of log N")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--window-start", type=int, default=None)
    p.set_defaults(handler=fit_command)

    p = commands.add_parser("norm", help="sup_r r * #{n : f_n >= r}")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(handler=norm_command)

    p = commands.add_parser("rota-baxter", help="Check a summation operator on random rational sequences")
    p.add_argument("--kind", choices=list(SUM_KINDS), default="partial")
    p.add_argument("--product", choices=["pointwise", "maxconv"], default="maxconv")
    p.add_argument("--theta", default=None, help="Weight; defaults to the operator's expected weight")
    p.add_argument("--samples", type=int, default=4)
    p.add_argument("--length", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=rota_baxter_command)
