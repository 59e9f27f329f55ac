"""Spin coherent states and the entangled coherent-state superposition."""
import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateStateError, ValidationError
from .model import DIM, QUBIT_DIM, QUTRIT_DIM

NORM_FLOOR = 1e-12


def spin_coherent(j, alpha):
    """Normalized spin coherent state |alpha, j> for j = 1/2 or j = 1.

    j = 1/2 gives (1, alpha) / sqrt(|alpha|^2 + 1) over (|0>, |1>);
    j = 1 gives (1, sqrt(2) alpha, alpha^2) / (|alpha|^2 + 1) over (|0>, |1>, |2>).
    """
    alpha = complex(alpha)
    w = abs(alpha) ** 2 + 1.0
    if j == 0.5:
        return np.array([1.0, alpha], dtype=np.complex128) / math.sqrt(w)
    if j == 1:
        return np.array([1.0, math.sqrt(2.0) * alpha, alpha * alpha], dtype=np.complex128) / w
    raise ValidationError(f"spin_coherent supports j = 1/2 or 1, got {j!r}")


def _as_complex(name, value):
    if isinstance(value, str):
        try:
            value = complex(value.replace(" ", "").replace("i", "j"))
        except ValueError:
            raise ValidationError(f"initial_state.{name}: cannot parse {value!r} as a complex number") from None
    elif isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValidationError(f"initial_state.{name}: expected [re, im], got {value!r}")
        value = complex(float(value[0]), float(value[1]))
    try:
        value = complex(value)
    except (TypeError, ValueError):
        raise ValidationError(f"initial_state.{name}: expected a number, got {value!r}") from None
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ValidationError(f"initial_state.{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class InitialStateSpec:
    """Parameters of cos(theta)|beta1>|alpha1> + e^{-i phi} sin(theta)|beta2>|alpha2>.

    alpha* label qutrit coherent states, beta* qubit coherent states.
    """

    alpha1: complex = 1.0
    alpha2: complex = -1.0
    beta1: complex = 1.0
    beta2: complex = -1.0
    theta: float = math.pi / 4
    phi: float = 0.0

    def __post_init__(self):
        for name in ("alpha1", "alpha2", "beta1", "beta2"):
            object.__setattr__(self, name, _as_complex(name, getattr(self, name)))
        for name in ("theta", "phi"):
            value = getattr(self, name)
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise ValidationError(f"initial_state.{name} must be real, got {value!r}") from None
            if not math.isfinite(value):
                raise ValidationError(f"initial_state.{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def symmetric(cls, alpha):
        """alpha1 = beta1 = alpha, alpha2 = beta2 = -alpha, theta = pi/4, phi = 0."""
        alpha = _as_complex("alpha", alpha)
        return cls(alpha1=alpha, alpha2=-alpha, beta1=alpha, beta2=-alpha)


def superpose_branches(c1, c2, alpha1, beta1, alpha2, beta2):
    """Normalize c1 |beta1>(x)|alpha1> + c2 |beta2>(x)|alpha2>."""
    branch1 = np.kron(spin_coherent(0.5, beta1), spin_coherent(1, alpha1))
    branch2 = np.kron(spin_coherent(0.5, beta2), spin_coherent(1, alpha2))
    psi = complex(c1) * branch1 + complex(c2) * branch2
    norm = np.linalg.norm(psi)
    if norm <= NORM_FLOOR:
        raise DegenerateStateError(
            f"coherent-state branches cancel: superposition norm {norm:.3g} <= {NORM_FLOOR}"
        )
    return psi / norm


def build_initial_state(spec: InitialStateSpec):
    """Six amplitudes over |00>, |01>, |02>, |10>, |11>, |12>, unit norm."""
    # cos as sin(pi/2 - theta): equal branch weights bit for bit at theta = pi/4,
    # so symmetric superpositions cancel exactly
    return superpose_branches(
        math.sin(math.pi / 2 - spec.theta),
        cmath.exp(-1j * spec.phi) * math.sin(spec.theta),
        spec.alpha1,
        spec.beta1,
        spec.alpha2,
        spec.beta2,
    )


def density_from_state(psi):
    """Projector |psi><psi|."""
    psi = np.asarray(psi, dtype=np.complex128)
    if psi.shape != (DIM,):
        raise ValidationError(f"expected {DIM} amplitudes, got shape {psi.shape}")
    return np.outer(psi, psi.conj())


def density_batch(states):
    """Projectors for a (n, 6) array of states."""
    states = np.asarray(states, dtype=np.complex128)
    return states[:, :, None] * states.conj()[:, None, :]


def product_density(rho_qubit, rho_qutrit):
    rho_qubit = np.asarray(rho_qubit, dtype=np.complex128)
    rho_qutrit = np.asarray(rho_qutrit, dtype=np.complex128)
    if rho_qubit.shape != (QUBIT_DIM, QUBIT_DIM) or rho_qutrit.shape != (QUTRIT_DIM, QUTRIT_DIM):
        raise ValidationError("product_density expects a 2x2 and a 3x3 matrix")
    return np.kron(rho_qubit, rho_qutrit)
