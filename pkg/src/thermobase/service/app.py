"""HTTP API over the compound store, search engine, and predictor.

Handlers are thin: every response body is the serialized output of an
underlying module call. Admin routes check a shared-secret header and
stay inert when the service has no token configured.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import Depends, FastAPI, Header, HTTPException, Query
from fastapi.responses import JSONResponse, RedirectResponse
from fastapi.staticfiles import StaticFiles

from thermobase import __version__
from thermobase.chem import ChemError
from thermobase.elba import OutOfDomainError
from thermobase.prediction import NameResolutionError, load_or_fit_tables, predict
from thermobase.search import AdvancedFilters, SearchEngine, SearchError
from thermobase.service.config import ServiceConfig
from thermobase.service.models import (
    AdvancedSearchRequest,
    CompoundOut,
    HitOut,
    PredictRequest,
    PredictionResponse,
    ReviewRequest,
    SearchResponse,
    StatsOut,
    StructureSearchRequest,
    SubmissionOut,
    SubmissionRequest,
    SubstructureSearchRequest,
)
from thermobase.store import (
    AlreadyDecidedError,
    RowError,
    Store,
    StoreError,
    UnknownSubmissionError,
)
from thermobase.thermo import consistency_check


def _error(status: int, code: str, message: str, reasons: list[str] | None = None,
           field: str | None = None) -> JSONResponse:
    body = {"error": {"code": code, "message": message}}
    if reasons:
        body["error"]["reasons"] = reasons
    if field:
        body["error"]["field"] = field
    return JSONResponse(status_code=status, content=body)


def create_app(
    config: ServiceConfig | None = None,
    store: Store | None = None,
) -> FastAPI:
    config = config or ServiceConfig.from_env()
    store = store or Store(config.data_dir)
    engine = SearchEngine(store)
    tables = load_or_fit_tables(store, config.data_dir)

    app = FastAPI(
        title="thermobase",
        version=__version__,
        docs_url="/api/docs",
        openapi_url="/api/openapi.json",
    )
    app.state.store = store
    app.state.engine = engine
    app.state.tables = tables
    app.state.config = config

    # -- error mapping ------------------------------------------------------

    @app.exception_handler(OutOfDomainError)
    async def _domain_error(request, exc: OutOfDomainError):
        return _error(
            422, "out_of_domain",
            "estimation is restricted to non-polycyclic hydrocarbons",
            reasons=list(exc.verdict.reasons),
        )

    @app.exception_handler(ChemError)
    async def _chem_error(request, exc: ChemError):
        return _error(400, "parse_error", str(exc), field="smiles")

    @app.exception_handler(SearchError)
    async def _search_error(request, exc: SearchError):
        return _error(400, "bad_query", str(exc), field="q")

    @app.exception_handler(NameResolutionError)
    async def _name_error(request, exc: NameResolutionError):
        return _error(404, "name_not_resolved", str(exc), field="name")

    @app.exception_handler(RowError)
    async def _row_error(request, exc: RowError):
        return _error(400, "validation_failed", str(exc))

    @app.exception_handler(AlreadyDecidedError)
    async def _decided_error(request, exc: AlreadyDecidedError):
        return _error(409, "already_decided", str(exc))

    @app.exception_handler(UnknownSubmissionError)
    async def _unknown_submission(request, exc: UnknownSubmissionError):
        return _error(404, "unknown_submission", f"no submission {exc.args[0]}")

    @app.exception_handler(StoreError)
    async def _store_error(request, exc: StoreError):
        return _error(400, "store_error", str(exc))

    @app.exception_handler(HTTPException)
    async def _http_error(request, exc: HTTPException):
        if isinstance(exc.detail, dict):
            return JSONResponse(status_code=exc.status_code, content={"error": exc.detail})
        return _error(exc.status_code, "http_error", str(exc.detail))

    # -- auth ---------------------------------------------------------------

    def require_admin(x_admin_token: str | None = Header(default=None)) -> None:
        if not config.admin_token:
            raise HTTPException(
                status_code=401,
                detail={"code": "admin_disabled",
                        "message": "service has no admin token configured"},
            )
        if x_admin_token != config.admin_token:
            raise HTTPException(
                status_code=401,
                detail={"code": "bad_admin_token",
                        "message": "missing or wrong X-Admin-Token header"},
            )

    # -- routes -------------------------------------------------------------

    @app.get("/api/health")
    def health():
        return {
            "status": "ok",
            "version": __version__,
            "compounds": len(store.records),
            "phases_fitted": sorted(p.value for p in tables),
        }

    @app.get("/api/compounds/{molecular_id}", response_model=CompoundOut)
    def get_compound(molecular_id: str):
        rec = store.get(molecular_id)
        if rec is None:
            raise HTTPException(
                status_code=404,
                detail={"code": "unknown_compound",
                        "message": f"no compound {molecular_id}"},
            )
        return CompoundOut.of(rec, consistency_check(rec.thermo))

    @app.get("/api/search", response_model=SearchResponse)
    def quick_search(
        q: str = Query(..., min_length=1),
        mode: str = Query("quick"),
        limit: int = Query(100, ge=1, le=100),
    ):
        warning = None
        if mode == "quick":
            mode, hits, warning = engine.quick_search(q, limit=limit)
        elif mode == "name":
            hits = engine.search_name(q, limit=limit)
        elif mode == "formula":
            hits = engine.search_formula(q, limit=limit)
        elif mode in ("id", "casrn", "lookup"):
            hits, warning = engine.lookup(q)
        else:
            raise SearchError(f"unknown search mode {mode!r}")
        return SearchResponse(
            mode=mode, query=q, count=len(hits), warning=warning,
            hits=[HitOut.of(h) for h in hits],
        )

    @app.post("/api/search/advanced", response_model=SearchResponse)
    def advanced_search(req: AdvancedSearchRequest):
        wmin, wmax = req.weight_min, req.weight_max
        if req.weight is not None:
            wmin, wmax = req.weight - 0.01, req.weight + 0.01
        filters = AdvancedFilters(
            name=req.name,
            formula=req.formula,
            physical_state=req.physical_state,
            weight_min=wmin,
            weight_max=wmax,
            compound_class=req.compound_class,
            subclass=req.subclass,
            family=req.family,
            characteristics=tuple(req.characteristics),
        )
        hits = engine.search_advanced(filters)
        return SearchResponse(
            mode="advanced", query=filters_description(filters), count=len(hits),
            hits=[HitOut.of(h) for h in hits],
        )

    @app.post("/api/search/structure", response_model=SearchResponse)
    def structure_search(req: StructureSearchRequest):
        hits = engine.search_similarity(req.smiles, req.threshold_percent / 100.0)
        return SearchResponse(
            mode="similarity",
            query=f"{req.smiles} at {req.threshold_percent}%",
            count=len(hits),
            hits=[HitOut.of(h) for h in hits],
        )

    @app.post("/api/search/substructure", response_model=SearchResponse)
    def substructure_search(req: SubstructureSearchRequest):
        hits = engine.search_substructure(req.smiles)
        return SearchResponse(
            mode="substructure", query=req.smiles, count=len(hits),
            hits=[HitOut.of(h) for h in hits],
        )

    @app.post("/api/predict", response_model=PredictionResponse)
    def predict_endpoint(req: PredictRequest):
        if req.smiles is None and req.name is None:
            return _error(400, "bad_request", "provide smiles or name")
        p = predict(
            store,
            tables,
            smiles=req.smiles,
            name=req.name,
            trans_ring_double_bonds=req.trans_ring_double_bonds,
            allow_stub_resolver=config.resolver_stub,
        )
        return PredictionResponse.of(p)

    @app.post("/api/submissions", response_model=SubmissionOut, status_code=201)
    def create_submission(req: SubmissionRequest):
        payload = req.model_dump(by_alias=True, exclude={"submitter"}, exclude_none=True)
        sub = store.submit(payload, submitter=req.submitter)
        return SubmissionOut.of(sub)

    @app.get("/api/admin/pending", response_model=list[SubmissionOut])
    def list_pending(_: None = Depends(require_admin)):
        return [SubmissionOut.of(s) for s in store.pending_submissions()]

    @app.post("/api/admin/pending/{submission_id}/approve", response_model=SubmissionOut)
    def approve(submission_id: str, req: ReviewRequest | None = None,
                _: None = Depends(require_admin)):
        note = req.note if req else ""
        return SubmissionOut.of(store.review(submission_id, "approve", note))

    @app.post("/api/admin/pending/{submission_id}/reject", response_model=SubmissionOut)
    def reject(submission_id: str, req: ReviewRequest | None = None,
               _: None = Depends(require_admin)):
        note = req.note if req else ""
        return SubmissionOut.of(store.review(submission_id, "reject", note))

    @app.get("/api/stats", response_model=StatsOut)
    def stats():
        return StatsOut.of(store.stats())

    # -- static UI ----------------------------------------------------------

    ui_dir = config.ui_dir
    if ui_dir is None:
        bundled = Path(__file__).resolve().parents[3] / "frontend" / "dist"
        if bundled.is_dir():
            ui_dir = str(bundled)
    if ui_dir and Path(ui_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

        @app.get("/", include_in_schema=False)
        def index():
            return RedirectResponse("/ui/")

    return app


def filters_description(filters: AdvancedFilters) -> str:
    parts = []
    if filters.name:
        parts.append(f"name contains {filters.name!r}")
    if filters.formula:
        parts.append(f"formula {filters.formula}")
    if filters.physical_state:
        parts.append(f"state {filters.physical_state}")
    if filters.weight_min is not None or filters.weight_max is not None:
        parts.append(f"MW in [{filters.weight_min}, {filters.weight_max}]")
    if filters.compound_class:
        parts.append(f"class {filters.compound_class!r}")
    if filters.subclass:
        parts.append(f"subclass {filters.subclass!r}")
    if filters.family:
        parts.append(f"family {filters.family!r}")
    if filters.characteristics:
        parts.append("characteristics " + ", ".join(filters.characteristics))
    return "; ".join(parts)
