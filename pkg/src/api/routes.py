"""
API Routes
==========
Read-only FastAPI endpoints for factorizations, the parity bijection, f_S
and the generating-function check.
"""

import logging
from datetime import datetime
from typing import Callable, List, TypeVar

from fastapi import APIRouter, FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from .. import __version__
from ..bijection.parity import classify_word, omega_trace, psi_trace
from ..bijection.permutation_map import f_s_inverse_trace, f_s_trace
from ..config import get_config
from ..errors import CombinatoricsError
from ..necklaces.maps import SubsetS, phi, xi
from ..perms.permutation import parse_permutation
from ..series.identities import verify_gf_identity
from ..words.core import INFINITY, format_word, parse_word
from ..words.lyndon import isf, lyndon_factorize, standard_factorization

logger = logging.getLogger(__name__)

config = get_config()

T = TypeVar("T")


# Request/Response models
class FsBatchRequest(BaseModel):
    subset: str = Field(..., description='Subset S of [n-1], e.g. "4,7" or "full"')
    permutations: List[str] = Field(..., description="Permutations in cycle or one-line notation")
    inverse: bool = Field(default=False, description="Apply f_S^-1 instead of f_S")


def _guard(label: str, action: Callable[[], T]) -> T:
    """Run a computation, turning bad input into 400 and anything else into 500."""
    try:
        return action()
    except CombinatoricsError as e:
        logger.info(f"{label}: rejected input: {e.message}")
        raise HTTPException(status_code=400, detail=e.to_dict())
    except Exception as e:
        logger.error(f"Error in {label}: {e}")
        raise HTTPException(status_code=500, detail=str(e))


# Create FastAPI app
def create_app() -> FastAPI:
    """Create and configure FastAPI application."""

    app = FastAPI(
        title="Lyndon Parity API",
        description="""
        Lyndon factorizations and the odd/even parity bijection:
        - Lyndon, standard and iterated standard factorizations
        - Psi / Omega with full step traces
        - Phi_S, Xi_S and the permutation map f_S
        - Truncated generating-function identity check
        """,
        version=__version__,
        docs_url="/docs",
        redoc_url="/redoc",
    )

    # CORS middleware
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_credentials=True,
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )

    # Include router
    app.include_router(router, prefix="/api")

    # Root endpoint
    @app.get("/")
    async def root():
        return {
            "name": "Lyndon Parity API",
            "version": __version__,
            "status": "running",
            "docs": "/docs",
        }

    # Health check
    @app.get("/health")
    async def health():
        return {"status": "healthy", "timestamp": datetime.now().isoformat()}

    return app


# Router for API endpoints
router = APIRouter()


# ═══════════════════════════════════════════════════════════════════════════
#                              WORD ENDPOINTS
# ═══════════════════════════════════════════════════════════════════════════

@router.get("/factorize/{word}")
async def get_factorization(word: str):
    """Lyndon factorization, with the standard factorization of every factor."""
    def compute():
        w = parse_word(word)
        factorization = lyndon_factorize(w)
        return {
            "word": format_word(w),
            "factors": [format_word(f) for f in factorization],
            "starts": factorization.starts,
            "rendered": factorization.render(config.output.factor_bar),
            "standard": [
                standard_factorization(f).render(config.output.dashed_bar) if len(f) > 1 else None
                for f in factorization
            ],
        }
    return _guard("factorize", compute)


@router.get("/isf/{word}")
async def get_isf(word: str, wrt: str = Query(default="inf", description="Reference word u, or inf")):
    """Iterated standard factorization of a Lyndon word with respect to u."""
    def compute():
        w = parse_word(word)
        reference = INFINITY if wrt == "inf" else parse_word(wrt)
        decomposition = isf(w, reference)
        return {
            "word": format_word(w),
            "wrt": format_word(reference),
            "head": format_word(decomposition.head),
            "suffixes": [format_word(s) for s in decomposition.tail],
            "rendered": decomposition.render(config.output.dashed_bar),
        }
    return _guard("isf", compute)


@router.get("/word-class/{word}")
async def get_word_class(word: str):
    def compute():
        w = parse_word(word)
        return {"word": format_word(w), "class": classify_word(w).value}
    return _guard("word-class", compute)


# ═══════════════════════════════════════════════════════════════════════════
#                            BIJECTION ENDPOINTS
# ═══════════════════════════════════════════════════════════════════════════

@router.get("/psi/{word}")
async def get_psi(word: str):
    """Psi with its (O, rule, E) trace rows."""
    def compute():
        w = parse_word(word)
        trace = psi_trace(w)
        return {"word": format_word(w), "steps": trace.records(), "result": format_word(trace.result)}
    return _guard("psi", compute)


@router.get("/omega/{word}")
async def get_omega(word: str):
    """Omega with its (O', rule, E') trace rows."""
    def compute():
        w = parse_word(word)
        trace = omega_trace(w)
        return {"word": format_word(w), "steps": trace.records(), "result": format_word(trace.result)}
    return _guard("omega", compute)


@router.get("/phi")
async def get_phi(perm: str = Query(...), subset: str = Query(..., alias="set")):
    def compute():
        pi = parse_permutation(perm)
        return phi(SubsetS.parse(subset, pi.n), pi).to_dict()
    return _guard("phi", compute)


@router.get("/xi")
async def get_xi(perm: str = Query(...), subset: str = Query(..., alias="set")):
    def compute():
        pi = parse_permutation(perm)
        return xi(SubsetS.parse(subset, pi.n), pi).to_dict()
    return _guard("xi", compute)


@router.get("/fs")
async def get_fs(
    perm: str = Query(..., description="Permutation with only odd cycles"),
    subset: str = Query(..., alias="set", description="S containing Asc(perm)"),
):
    """f_S with every intermediate object."""
    def compute():
        pi = parse_permutation(perm)
        computation = f_s_trace(SubsetS.parse(subset, pi.n), pi)
        return {**computation.to_dict(), "steps": computation.trace.records()}
    return _guard("fs", compute)


@router.get("/fs-inv")
async def get_fs_inverse(
    perm: str = Query(..., description="Permutation with only even cycles plus at most one fixed point"),
    subset: str = Query(..., alias="set", description="S containing Des(perm)"),
):
    def compute():
        sigma = parse_permutation(perm)
        computation = f_s_inverse_trace(SubsetS.parse(subset, sigma.n), sigma)
        return {**computation.to_dict(), "steps": computation.trace.records()}
    return _guard("fs-inv", compute)


@router.post("/fs/batch")
async def post_fs_batch(request: FsBatchRequest):
    """
    Apply f_S (or its inverse) to several permutations of the same size.

    Each entry reports either its image or the error that rejected it.
    """
    def compute():
        results = []
        for text in request.permutations:
            try:
                pi = parse_permutation(text)
                subset = SubsetS.parse(request.subset, pi.n)
                computation = (f_s_inverse_trace if request.inverse else f_s_trace)(subset, pi)
                results.append({"input": text, "image": computation.image.to_dict()})
            except CombinatoricsError as e:
                results.append({"input": text, "error": e.to_dict()})
        return {"subset": request.subset, "inverse": request.inverse, "results": results}
    return _guard("fs-batch", compute)


# ═══════════════════════════════════════════════════════════════════════════
#                          VERIFICATION ENDPOINTS
# ═══════════════════════════════════════════════════════════════════════════

@router.get("/verify/gf")
async def get_verify_gf(
    k: int = Query(default=config.alphabet.default_size, ge=1, le=4),
    degree: int = Query(default=6, ge=0, le=10),
):
    """Truncated check of prod_odd (1 + wt) prod_even (1 - wt) = 1 + x_1 + ... + x_k."""
    return _guard("verify-gf", lambda: verify_gf_identity(k, degree).to_dict())


# Create the app instance
app = create_app()
