// API payload shapes, mirroring the server's serialization models.

export interface ThermoValueOut {
  kind: string;
  value: number;
  uncertainty?: number | null;
}

export interface ConsistencyFindingOut {
  identity: string;
  residual: number;
  combined_uncertainty: number;
  consistent: boolean;
  missing_uncertainties: boolean;
}

export interface HitOut {
  molecular_id: string;
  name: string;
  formula: string;
  casrn: string | null;
  smiles: string;
  weight: number;
  match_index?: number | null;
  matched_name?: string | null;
  similarity?: number | null;
  mw_delta?: number | null;
  phonetic?: boolean;
}

export interface SearchResponse {
  mode: string;
  query: string;
  count: number;
  warning?: string | null;
  hits: HitOut[];
}

export interface CompoundOut {
  molecular_id: string;
  name: string;
  synonyms: string[];
  casrn: string | null;
  formula: string;
  weight: number;
  physical_state: string;
  smiles: string;
  usmiles: string;
  class: string;
  subclass: string;
  family: string;
  characteristics: string[];
  thermo: ThermoValueOut[];
  observations: string;
  references: string[];
  consistency: ConsistencyFindingOut[];
}

export interface FeatureRowOut {
  code: string;
  frequency: number;
  description: string;
}

export interface PhaseEstimateOut {
  phase: string;
  value: number | null;
  missing_codes: string[];
}

export interface PredictionResponse {
  input: string;
  smiles: string;
  canonical_smiles: string;
  formula: string;
  weight: number;
  name: string | null;
  features: Record<string, number>;
  feature_rows: FeatureRowOut[];
  estimates: PhaseEstimateOut[];
  experimental: ThermoValueOut[] | null;
  isomers: HitOut[];
}

export interface ApiErrorDetail {
  code: string;
  message: string;
  field?: string | null;
  reasons?: string[];
}

export interface ApiErrorBody {
  error: ApiErrorDetail;
}

export interface AdvancedFilters {
  name?: string;
  formula?: string;
  physical_state?: string;
  weight_min?: number;
  weight_max?: number;
  class?: string;
  subclass?: string;
  family?: string;
  characteristics?: string[];
}

export class ApiError extends Error {
  readonly detail: ApiErrorDetail;
  readonly status: number;

  constructor(status: number, detail: ApiErrorDetail) {
    super(detail.message);
    this.status = status;
    this.detail = detail;
  }
}
