from hestonldp.cgf.exceptions import CompositionOrderError
from hestonldp.cgf.models import CgfSpec, Side, Truncation
from hestonldp.model import HestonParams



def base_spec(params: HestonParams) -> CgfSpec:
    """Limiting cgf of (X_t - x0)/t under the pricing measure."""
    return CgfSpec(params=params)


def tilt(spec: CgfSpec, s: float) -> CgfSpec:
    """Shift the cgf argument, Lambda_s(u) = Lambda(u + s).

    A tilt of 1 is the change to the share measure.

    Raises:
        CompositionOrderError: `spec` is already truncated.
    """
    if spec.truncation is not None:
        raise CompositionOrderError()
    return CgfSpec(params=spec.params, tilt=spec.tilt + s)


def perturb(spec: CgfSpec, lam: float, side: Side | str) -> CgfSpec:
    """Limiting cgf of Z_t + E/t (`UPPER`) or Z_t - E/t (`LOWER`), E ~ Exp(lam).

    The perturbation intersects the effective domain with (-inf, lam) or
    (-lam, inf). Repeated perturbations on one side keep the tighter cut.

    Raises:
        EmptyDomain: The intersection is empty.
        ValidationError: `lam` is not positive.
    """
    truncation = Truncation(lam=lam, side=Side(side))
    current = spec.truncation
    if current is not None:
        if current.side is not truncation.side:
            raise ValueError("A spec carries at most one one-sided truncation")
        truncation = current if current.lam <= truncation.lam else truncation
    return CgfSpec(params=spec.params, tilt=spec.tilt, truncation=truncation)
