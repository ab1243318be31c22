"""
Verification Suite - Named checks of every exact identity
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from domain.enums import CheckStatus, Suite
from domain.errors import OrbitKitError, OutsideBigCell, OutsideChart, OutsideOverlap
from domain.interfaces import IVerificationCheck
from domain.lie import ParabolicData, WeightLambda, WeylCoset
from domain.report import CheckResult
from domain.scalar import GaussianRational
from infrastructure.lie.algebra import coadjoint, orbit_invariant
from infrastructure.symplectic.classical import hermitian_relations
from infrastructure.symplectic.pushforward import verify_pullback
from infrastructure.symplectic.twist import transported_form_check, verify_affine_decomposition
from infrastructure.twisted.affine_action import psi_affine, psi_global, transition
from infrastructure.twisted.key_relation import solve_w, xi_from_w
from infrastructure.twisted.moment_map import mu_global, mu_inverse, mu_local, scale_check
from application.sampler import SampleStream, Sampler

logger = logging.getLogger(__name__)


@dataclass
class VerificationContext:
    """
    Shared, read-only data for all checks of a run

    Attributes:
        weight: The weight lambda
        parabolic: Its parabolic data
        atlas: Chart labels
        sampler: Seeded sampler
        max_attempts: Draws allowed per sample before it is recorded as skipped
        scale: Factor for the rescaling check
    """
    weight: WeightLambda
    parabolic: ParabolicData
    atlas: List[WeylCoset]
    sampler: Sampler
    max_attempts: int = 5
    scale: Optional[GaussianRational] = None


def _str_vector(values) -> List[str]:
    return [str(v) for v in values]


class VerificationCheck(IVerificationCheck):
    """
    Base check: draws data, evaluates one identity, redraws when out of chart
    """
    name = "check"

    def __init__(self, context: VerificationContext):
        self.context = context

    @property
    def weight(self) -> WeightLambda:
        return self.context.weight

    @property
    def parabolic(self) -> ParabolicData:
        return self.context.parabolic

    def chart_for(self, sample: int) -> WeylCoset:
        """Charts are cycled through in atlas order"""
        return self.context.atlas[sample % len(self.context.atlas)]

    def evaluate(self, stream: SampleStream, sample: int) -> Tuple[bool, Optional[Dict[str, Any]]]:
        """
        Evaluate the identity on one draw
        Args:
            stream: Random source for this draw
            sample: Sample index
        Returns:
            (passed, detail); detail is reported when present
        """
        raise NotImplementedError

    def run(self, sample: int) -> CheckResult:
        reason = ""
        for attempt in range(self.context.max_attempts):
            stream = self.context.sampler.stream(self.name, sample, attempt)
            try:
                passed, detail = self.evaluate(stream, sample)
            except OutsideBigCell as e:
                logger.debug(f"{self.name}[{sample}] attempt {attempt}: {e}")
                reason = str(e)
                continue
            except OrbitKitError as e:
                logger.warning(f"{self.name}[{sample}] errored: {e}")
                return CheckResult(self.name, sample, CheckStatus.ERRORED, attempt + 1,
                                   {'error': type(e).__name__, 'message': str(e)})
            if not passed:
                logger.warning(f"{self.name}[{sample}] failed: {detail}")
            status = CheckStatus.PASSED if passed else CheckStatus.FAILED
            return CheckResult(self.name, sample, status, attempt + 1, detail)
        return CheckResult(self.name, sample, CheckStatus.SKIPPED, self.context.max_attempts,
                           {'reason': reason})


class RoundTripCheck(VerificationCheck):
    """solve_w and xi_from_w invert each other, mu_inverse inverts mu, and mu stays on the orbit"""
    name = "roundtrip"

    def evaluate(self, stream, sample):
        point = stream.chart_point(self.parabolic, self.chart_for(sample))
        w = solve_w(self.weight, self.parabolic, point.sigma, point.z, point.xi).w
        xi_back = tuple(xi_from_w(self.weight, self.parabolic, point.sigma, point.z, w))
        w_drawn = tuple(stream.vector(self.parabolic.dim))
        xi_drawn = xi_from_w(self.weight, self.parabolic, point.sigma, point.z, w_drawn)
        w_back = solve_w(self.weight, self.parabolic, point.sigma, point.z, xi_drawn).w
        orbit_point = mu_global(self.weight, self.parabolic, self.context.atlas, point)
        recovered = mu_inverse(self.weight, self.parabolic, self.context.atlas, orbit_point)
        if recovered.sigma != point.sigma:
            recovered = transition(self.weight, self.parabolic, recovered, point.sigma)
        same_orbit = orbit_invariant(orbit_point) == orbit_invariant(self.weight.matrix())
        passed = xi_back == point.xi and w_back == w_drawn and recovered == point and same_orbit
        if passed:
            return True, None
        return False, {
            'point': point.to_dict(self.parabolic),
            'xi_from_w': _str_vector(xi_back),
            'w_drawn': _str_vector(w_drawn),
            'solve_w': _str_vector(w_back),
            'recovered': recovered.to_dict(self.parabolic),
            'same_orbit': same_orbit,
        }


class CocycleCheck(VerificationCheck):
    """psi(g) psi(h) = psi(gh) with every image on the source chart"""
    name = "cocycle"

    def evaluate(self, stream, sample):
        point = stream.chart_point(self.parabolic, self.chart_for(sample))
        g = stream.invertible_matrix(self.parabolic.n)
        h = stream.invertible_matrix(self.parabolic.n)
        step = psi_affine(self.weight, self.parabolic, h, point)
        composed = psi_affine(self.weight, self.parabolic, g, step)
        direct = psi_affine(self.weight, self.parabolic, g @ h, point)
        if composed == direct:
            return True, None
        return False, {
            'point': point.to_dict(self.parabolic),
            'g': g.to_dict(),
            'h': h.to_dict(),
            'composed': composed.to_dict(self.parabolic),
            'direct': direct.to_dict(self.parabolic),
        }


class EquivarianceCheck(VerificationCheck):
    """mu(Psi(g) p) = Ad(g) mu(p)"""
    name = "equivariance"

    def evaluate(self, stream, sample):
        point = stream.chart_point(self.parabolic, self.chart_for(sample))
        g = stream.invertible_matrix(self.parabolic.n)
        moved = psi_global(self.weight, self.parabolic, self.context.atlas, g, point)
        lhs = mu_global(self.weight, self.parabolic, self.context.atlas, moved).F
        rhs = coadjoint(g, mu_global(self.weight, self.parabolic, self.context.atlas, point).F)
        if lhs == rhs:
            return True, None
        return False, {
            'point': point.to_dict(self.parabolic),
            'g': g.to_dict(),
            'lhs': lhs.to_dict(),
            'rhs': rhs.to_dict(),
        }


class OverlapCheck(VerificationCheck):
    """mu agrees across every chart containing the point, and transitions invert"""
    name = "overlap"

    def evaluate(self, stream, sample):
        point = stream.chart_point(self.parabolic, self.chart_for(sample))
        reference = mu_local(self.weight, self.parabolic, point).F
        mismatches = []
        for tau in self.context.atlas:
            try:
                other = transition(self.weight, self.parabolic, point, tau)
            except OutsideOverlap:
                continue
            agrees = mu_local(self.weight, self.parabolic, other).F == reference
            returns = transition(self.weight, self.parabolic, other, point.sigma) == point
            if not (agrees and returns):
                mismatches.append({'tau': list(tau.permutation), 'mu_agrees': agrees, 'inverse': returns})
        if not mismatches:
            return True, None
        return False, {'point': point.to_dict(self.parabolic), 'mismatches': mismatches}


class PullbackCheck(VerificationCheck):
    """mu pulls the orbit form back to the chart form"""
    name = "pullback"

    def evaluate(self, stream, sample):
        point = stream.chart_point(self.parabolic, self.chart_for(sample))
        report = verify_pullback(self.weight, self.parabolic, point)
        if report.passed:
            return True, None
        return False, {'point': point.to_dict(self.parabolic), **report.to_dict()}


class HermitianCheck(VerificationCheck):
    """Translation and untwisted-moment relations of the two-block case"""
    name = "hermitian"

    def applies(self) -> bool:
        return len(self.parabolic.block_sizes) == 2

    def evaluate(self, stream, sample):
        point = stream.chart_point(self.parabolic, self.context.atlas[0])
        relations = hermitian_relations(self.weight, self.parabolic, point)
        if all(relations.values()):
            return True, None
        return False, {'point': point.to_dict(self.parabolic), 'relations': relations}


class ScaleCheck(VerificationCheck):
    """Rescaling lambda rescales xi and mu and inversely rescales w"""
    name = "scale"

    def applies(self) -> bool:
        return self.context.scale is not None

    def evaluate(self, stream, sample):
        point = stream.chart_point(self.parabolic, self.chart_for(sample))
        relations = scale_check(self.weight, self.parabolic, point, self.context.scale)
        if all(relations.values()):
            return True, None
        return False, {'point': point.to_dict(self.parabolic), 'relations': relations}


class AffineDecompositionCheck(VerificationCheck):
    """psi(g) xi pulled back along z -> g.z equals xi plus the twisting form"""
    name = "affine_decomposition"

    def evaluate(self, stream, sample):
        point = stream.chart_point(self.parabolic, self.chart_for(sample))
        g = stream.invertible_matrix(self.parabolic.n)
        if verify_affine_decomposition(self.weight, self.parabolic, g, point):
            return True, None
        return False, {'point': point.to_dict(self.parabolic), 'g': g.to_dict()}


class TransportedFormCheck(VerificationCheck):
    """Chart transitions preserve the chart symplectic form"""
    name = "transported_form"

    def evaluate(self, stream, sample):
        point = stream.chart_point(self.parabolic, self.chart_for(sample))
        tau = stream.choice(self.context.atlas)
        try:
            preserved = transported_form_check(self.weight, self.parabolic, point, tau)
        except OutsideChart:
            tau = point.sigma
            preserved = transported_form_check(self.weight, self.parabolic, point, tau)
        if preserved:
            return True, None
        return False, {'point': point.to_dict(self.parabolic), 'tau': list(tau.permutation)}


class MuSampleCheck(VerificationCheck):
    """Evaluates mu at a random point and reports it"""
    name = "mu"

    def evaluate(self, stream, sample):
        point = stream.chart_point(self.parabolic, self.chart_for(sample))
        orbit_point = mu_global(self.weight, self.parabolic, self.context.atlas, point)
        on_orbit = orbit_invariant(orbit_point) == orbit_invariant(self.weight.matrix())
        return on_orbit, {'point': point.to_dict(self.parabolic), 'mu': orbit_point.to_dict()}


SUITE_CHECKS = {
    Suite.VERIFY_ALL: [RoundTripCheck, CocycleCheck, EquivarianceCheck, OverlapCheck,
                       PullbackCheck, HermitianCheck, ScaleCheck],
    Suite.MU: [MuSampleCheck],
    Suite.TRANSITION: [OverlapCheck, TransportedFormCheck],
    Suite.ACTION: [EquivarianceCheck, CocycleCheck, AffineDecompositionCheck],
}


def build_checks(suite: Suite, context: VerificationContext) -> List[VerificationCheck]:
    """
    Instantiate the checks of a suite that apply to the configured weight
    Args:
        suite: Suite to run
        context: Shared verification data
    Returns:
        List of checks in report order
    """
    checks = [cls(context) for cls in SUITE_CHECKS.get(suite, [])]
    return [check for check in checks if check.applies()]
