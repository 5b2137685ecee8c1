#!/usr/bin/env python3
"""Regenerate the bundled compound dataset.

Gas-phase formation enthalpies and vaporization enthalpies are typed in
from the standard critical compilations (Pedley's tables and related
reviews); liquid-phase formation values are derived as gas minus
vaporization so every stored record is thermodynamically consistent by
construction. Functional-group tags are derived from the structures,
with manual extras (e.g. radical) merged in.

Run from the repository root:

    python scripts/build_fixture_dataset.py
"""

from __future__ import annotations

import json
import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from thermobase.chem import parse_smiles
from thermobase.search import derive_characteristics
from thermobase.store import Store

OUT = Path(__file__).resolve().parents[1] / "src" / "thermobase" / "data" / "compounds.jsonl"

PEDLEY94 = "J. B. Pedley, Thermochemical Data and Structures of Organic Compounds, Vol. 1, 1994, 1-571"
PEDLEY86 = "J. B. Pedley, R. D. Naylor, S. P. Kirby, Thermochemical Data of Organic Compounds, 2nd ed., 1986, 1-792"
VEREVKIN98 = "S. P. Verevkin, J. Chem. Thermodyn. 1998, 30, 1029-1040"

HC = "01 - Hydrocarbons"
RING_NB = "02 - Ring Systems Containing Only Isolated Non-Benzenoid Rings"
OXY = "03 - Oxygen Compounds"
FUSED = "04 - Fused-Ring Aromatic Hydrocarbons"

# name, synonyms, casrn, smiles, state, (class, subclass, family),
# thermo dict: g/l/cr/vap/sub/fus -> (value, uncertainty); l="derived"
# computes gas - vaporization.
COMPOUNDS: list[dict] = [
    # --- alkanes, gases at 298 K --------------------------------------------
    dict(name="Methane", syn=["Marsh gas"], cas="74-82-8", smi="C", state="gas",
         tax=(HC, "Alkanes", "n-Alkanes"), g=(-74.4, 0.4)),
    dict(name="Ethane", syn=[], cas="74-84-0", smi="CC", state="gas",
         tax=(HC, "Alkanes", "n-Alkanes"), g=(-83.8, 0.4)),
    dict(name="Propane", syn=[], cas="74-98-6", smi="CCC", state="gas",
         tax=(HC, "Alkanes", "n-Alkanes"), g=(-104.7, 0.5)),
    dict(name="Butane", syn=["n-Butane"], cas="106-97-8", smi="CCCC", state="gas",
         tax=(HC, "Alkanes", "n-Alkanes"), g=(-125.7, 0.6)),
    dict(name="2-Methylpropane", syn=["Isobutane"], cas="75-28-5", smi="CC(C)C",
         state="gas", tax=(HC, "Alkanes", "Branched Alkanes"), g=(-134.2, 0.6)),
    dict(name="2,2-Dimethylpropane", syn=["Neopentane"], cas="463-82-1",
         smi="CC(C)(C)C", state="gas", tax=(HC, "Alkanes", "Branched Alkanes"),
         g=(-168.0, 0.8)),
    # --- alkanes, liquids ----------------------------------------------------
    dict(name="Pentane", syn=["n-Pentane"], cas="109-66-0", smi="CCCCC",
         state="liquid", tax=(HC, "Alkanes", "n-Alkanes"),
         g=(-146.9, 0.8), vap=(26.4, 0.1), l="derived"),
    dict(name="2-Methylbutane", syn=["Isopentane"], cas="78-78-4", smi="CCC(C)C",
         state="liquid", tax=(HC, "Alkanes", "Branched Alkanes"),
         g=(-153.6, 0.9), vap=(24.9, 0.1), l="derived"),
    dict(name="Hexane", syn=["n-Hexane"], cas="110-54-3", smi="CCCCCC",
         state="liquid", tax=(HC, "Alkanes", "n-Alkanes"),
         g=(-166.9, 0.8), vap=(31.6, 0.2), l="derived"),
    dict(name="2-Methylpentane", syn=["Isohexane"], cas="107-83-5", smi="CCCC(C)C",
         state="liquid", tax=(HC, "Alkanes", "Branched Alkanes"),
         g=(-174.6, 0.8), vap=(29.9, 0.2), l="derived"),
    dict(name="3-Methylpentane", syn=[], cas="96-14-0", smi="CCC(C)CC",
         state="liquid", tax=(HC, "Alkanes", "Branched Alkanes"),
         g=(-171.9, 0.8), vap=(30.3, 0.2), l="derived"),
    dict(name="2,2-Dimethylbutane", syn=["Neohexane"], cas="75-83-2", smi="CCC(C)(C)C",
         state="liquid", tax=(HC, "Alkanes", "Branched Alkanes"),
         g=(-185.9, 1.0), vap=(27.7, 0.2), l="derived"),
    dict(name="2,3-Dimethylbutane", syn=[], cas="79-29-8", smi="CC(C)C(C)C",
         state="liquid", tax=(HC, "Alkanes", "Branched Alkanes"),
         g=(-178.3, 1.0), vap=(29.1, 0.2), l="derived"),
    dict(name="Heptane", syn=["n-Heptane"], cas="142-82-5", smi="CCCCCCC",
         state="liquid", tax=(HC, "Alkanes", "n-Alkanes"),
         g=(-187.6, 0.8), vap=(36.6, 0.2), l="derived"),
    dict(name="2-Methylhexane", syn=[], cas="591-76-4", smi="CCCCC(C)C",
         state="liquid", tax=(HC, "Alkanes", "Branched Alkanes"),
         g=(-194.5, 1.0), vap=(34.9, 0.2), l="derived"),
    dict(name="3-Methylhexane", syn=[], cas="589-34-4", smi="CCCC(C)CC",
         state="liquid", tax=(HC, "Alkanes", "Branched Alkanes"),
         g=(-191.3, 1.0), vap=(35.1, 0.2), l="derived"),
    dict(name="2,2-Dimethylpentane", syn=[], cas="590-35-2", smi="CCCC(C)(C)C",
         state="liquid", tax=(HC, "Alkanes", "Branched Alkanes"),
         g=(-205.7, 1.2), vap=(32.4, 0.2), l="derived"),
    dict(name="2,4-Dimethylpentane", syn=[], cas="108-08-7", smi="CC(C)CC(C)C",
         state="liquid", tax=(HC, "Alkanes", "Branched Alkanes"),
         g=(-201.7, 1.2), vap=(32.9, 0.2), l="derived"),
    dict(name="3,3-Dimethylpentane", syn=[], cas="562-49-2", smi="CCC(C)(C)CC",
         state="liquid", tax=(HC, "Alkanes", "Branched Alkanes"),
         g=(-201.2, 1.2), vap=(33.0, 0.2), l="derived"),
    dict(name="2,2,3-Trimethylbutane", syn=["Triptane"], cas="464-06-2",
         smi="CC(C)C(C)(C)C", state="liquid", tax=(HC, "Alkanes", "Branched Alkanes"),
         g=(-204.4, 1.2), vap=(32.0, 0.2), l="derived"),
    dict(name="Octane", syn=["n-Octane"], cas="111-65-9", smi="CCCCCCCC",
         state="liquid", tax=(HC, "Alkanes", "n-Alkanes"),
         g=(-208.5, 1.0), vap=(41.5, 0.3), l="derived"),
    dict(name="2-Methylheptane", syn=[], cas="592-27-8", smi="CCCCCC(C)C",
         state="liquid", tax=(HC, "Alkanes", "Branched Alkanes"),
         g=(-215.3, 1.3), vap=(39.7, 0.3), l="derived"),
    dict(name="2,2,4-Trimethylpentane", syn=["Isooctane"], cas="540-84-1",
         smi="CC(C)CC(C)(C)C", state="liquid", tax=(HC, "Alkanes", "Branched Alkanes"),
         g=(-224.0, 1.3), vap=(35.1, 0.2), l="derived"),
    dict(name="2,2,3,3-Tetramethylbutane", syn=["Hexamethylethane"], cas="594-82-1",
         smi="CC(C)(C)C(C)(C)C", state="crystal",
         tax=(HC, "Alkanes", "Branched Alkanes"), g=(-225.9, 1.9)),
    dict(name="Nonane", syn=["n-Nonane"], cas="111-84-2", smi="CCCCCCCCC",
         state="liquid", tax=(HC, "Alkanes", "n-Alkanes"),
         g=(-228.2, 1.2), vap=(46.4, 0.3), l="derived"),
    dict(name="Decane", syn=["n-Decane"], cas="124-18-5", smi="CCCCCCCCCC",
         state="liquid", tax=(HC, "Alkanes", "n-Alkanes"),
         g=(-249.5, 1.3), vap=(51.4, 0.3), l="derived"),
    # --- cycloalkanes ---------------------------------------------------------
    dict(name="Cyclopentane", syn=[], cas="287-92-3", smi="C1CCCC1",
         state="liquid", tax=(HC, "Cycloalkanes", "Cyclopentanes"),
         g=(-76.4, 0.8), vap=(28.5, 0.1), l="derived"),
    dict(name="Methylcyclopentane", syn=[], cas="96-37-7", smi="CC1CCCC1",
         state="liquid", tax=(HC, "Cycloalkanes", "Cyclopentanes"),
         g=(-105.9, 0.8), vap=(31.7, 0.2), l="derived"),
    dict(name="Ethylcyclopentane", syn=[], cas="1640-89-7", smi="CCC1CCCC1",
         state="liquid", tax=(HC, "Cycloalkanes", "Cyclopentanes"),
         g=(-126.9, 1.0), vap=(36.4, 0.2), l="derived"),
    dict(name="1,1-Dimethylcyclopentane", syn=[], cas="1638-26-2", smi="CC1(C)CCCC1",
         state="liquid", tax=(HC, "Cycloalkanes", "Cyclopentanes"),
         g=(-138.2, 1.3), vap=(34.4, 0.2), l="derived"),
    dict(name="Cyclohexane", syn=["Hexahydrobenzene"], cas="110-82-7", smi="C1CCCCC1",
         state="liquid", tax=(HC, "Cycloalkanes", "Cyclohexanes"),
         g=(-123.4, 0.8), vap=(33.0, 0.1), l="derived"),
    dict(name="Methylcyclohexane", syn=[], cas="108-87-2", smi="CC1CCCCC1",
         state="liquid", tax=(HC, "Cycloalkanes", "Cyclohexanes"),
         g=(-154.8, 1.0), vap=(35.4, 0.2), l="derived"),
    dict(id="C001598", name="Ethylcyclohexane", syn=[], cas="1678-91-7",
         smi="CCC1CCCCC1", state="liquid", tax=(HC, "Cycloalkanes", "Cyclohexanes"),
         g=(-171.5, 1.9), vap=(40.6, 0.2), l="derived"),
    dict(name="Propylcyclohexane", syn=[], cas="1678-92-8", smi="CCCC1CCCCC1",
         state="liquid", tax=(HC, "Cycloalkanes", "Cyclohexanes"),
         g=(-193.3, 1.5), vap=(45.1, 0.3), l="derived"),
    dict(id="C001608", name="1,1-Dimethylcyclohexane", syn=[], cas="590-66-9",
         smi="CC1(C)CCCCC1", state="liquid", tax=(HC, "Cycloalkanes", "Cyclohexanes"),
         g=(-180.9, 1.5), vap=(38.2, 0.3), l="derived"),
    dict(name="Cycloheptane", syn=["Suberane"], cas="291-64-5", smi="C1CCCCCC1",
         state="liquid", tax=(HC, "Cycloalkanes", "Cycloheptanes"),
         g=(-118.1, 1.0), vap=(38.5, 0.2), l="derived"),
    dict(name="Cyclooctane", syn=[], cas="292-64-8", smi="C1CCCCCCC1",
         state="liquid", tax=(HC, "Cycloalkanes", "Cyclooctanes"),
         g=(-124.4, 1.0), vap=(43.3, 0.3), l="derived"),
    dict(name="Bicyclohexyl", syn=["Cyclohexylcyclohexane", "Dicyclohexyl"],
         cas="92-51-3", smi="C1CCCCC1C1CCCCC1", state="liquid",
         tax=(HC, "Cycloalkanes", "Cyclohexanes"),
         g=(-215.7, 1.5), l=(-273.7, 1.4), vap="derived"),
    # --- alkylbenzenes --------------------------------------------------------
    dict(name="Benzene", syn=["Benzol"], cas="71-43-2", smi="c1ccccc1",
         state="liquid", tax=(HC, "Alkylbenzenes", "Benzene"),
         g=(82.6, 0.7), vap=(33.8, 0.1), l="derived"),
    dict(name="Toluene", syn=["Methylbenzene"], cas="108-88-3", smi="Cc1ccccc1",
         state="liquid", tax=(HC, "Alkylbenzenes", "Monoalkylbenzenes"),
         g=(50.0, 0.6), vap=(38.0, 0.1), l="derived"),
    dict(name="Ethylbenzene", syn=[], cas="100-41-4", smi="CCc1ccccc1",
         state="liquid", tax=(HC, "Alkylbenzenes", "Monoalkylbenzenes"),
         g=(29.9, 0.8), vap=(42.2, 0.2), l="derived"),
    dict(name="1,2-Dimethylbenzene", syn=["o-Xylene"], cas="95-47-6", smi="Cc1ccccc1C",
         state="liquid", tax=(HC, "Alkylbenzenes", "Xylenes"),
         g=(19.1, 1.0), vap=(43.4, 0.2), l="derived"),
    dict(name="1,3-Dimethylbenzene", syn=["m-Xylene"], cas="108-38-3", smi="Cc1cccc(C)c1",
         state="liquid", tax=(HC, "Alkylbenzenes", "Xylenes"),
         g=(17.3, 0.8), vap=(42.7, 0.2), l="derived"),
    dict(name="1,4-Dimethylbenzene", syn=["p-Xylene"], cas="106-42-3", smi="Cc1ccc(C)cc1",
         state="liquid", tax=(HC, "Alkylbenzenes", "Xylenes"),
         g=(18.0, 1.0), vap=(42.4, 0.2), l="derived"),
    dict(name="Propylbenzene", syn=["n-Propylbenzene"], cas="103-65-1", smi="CCCc1ccccc1",
         state="liquid", tax=(HC, "Alkylbenzenes", "Monoalkylbenzenes"),
         g=(7.9, 1.0), vap=(46.2, 0.2), l="derived"),
    dict(name="Isopropylbenzene", syn=["Cumene"], cas="98-82-8", smi="CC(C)c1ccccc1",
         state="liquid", tax=(HC, "Alkylbenzenes", "Monoalkylbenzenes"),
         g=(4.0, 1.0), vap=(45.1, 0.2), l="derived"),
    dict(name="1,2,3-Trimethylbenzene", syn=["Hemimellitene"], cas="526-73-8",
         smi="Cc1cccc(C)c1C", state="liquid", tax=(HC, "Alkylbenzenes", "Trimethylbenzenes"),
         g=(-9.5, 1.3), vap=(49.1, 0.3), l="derived"),
    dict(name="1,2,4-Trimethylbenzene", syn=["Pseudocumene"], cas="95-63-6",
         smi="Cc1ccc(C)c(C)c1", state="liquid", tax=(HC, "Alkylbenzenes", "Trimethylbenzenes"),
         g=(-13.9, 1.3), vap=(47.9, 0.3), l="derived"),
    dict(name="1,3,5-Trimethylbenzene", syn=["Mesitylene"], cas="108-67-8",
         smi="Cc1cc(C)cc(C)c1", state="liquid", tax=(HC, "Alkylbenzenes", "Trimethylbenzenes"),
         g=(-15.9, 1.3), vap=(47.5, 0.3), l="derived"),
    dict(name="Butylbenzene", syn=["n-Butylbenzene"], cas="104-51-8", smi="CCCCc1ccccc1",
         state="liquid", tax=(HC, "Alkylbenzenes", "Monoalkylbenzenes"),
         g=(-13.1, 1.5), vap=(51.4, 0.3), l="derived"),
    dict(name="sec-Butylbenzene", syn=["(1-Methylpropyl)benzene"], cas="135-98-8",
         smi="CCC(C)c1ccccc1", state="liquid", tax=(HC, "Alkylbenzenes", "Monoalkylbenzenes"),
         g=(-17.4, 1.7), vap=(48.7, 0.3), l="derived"),
    dict(name="tert-Butylbenzene", syn=["(1,1-Dimethylethyl)benzene"], cas="98-06-6",
         smi="CC(C)(C)c1ccccc1", state="liquid", tax=(HC, "Alkylbenzenes", "Monoalkylbenzenes"),
         g=(-22.7, 1.7), vap=(47.7, 0.3), l="derived"),
    dict(name="1-tert-Butyl-4-methylbenzene", syn=["p-tert-Butyltoluene", "4-tert-Butyltoluene"],
         cas="98-51-1", smi="CC(C)(C)c1ccc(C)cc1", state="liquid",
         tax=(HC, "Alkylbenzenes", "Dialkylbenzenes"),
         g=(-57.6, 1.0), l=(-109.7, 0.9), vap="derived", refs=[VEREVKIN98]),
    # --- alkenes and alkynes --------------------------------------------------
    dict(name="Ethene", syn=["Ethylene"], cas="74-85-1", smi="C=C", state="gas",
         tax=(HC, "Alkenes", "1-Alkenes"), g=(52.5, 0.3)),
    dict(name="Propene", syn=["Propylene"], cas="115-07-1", smi="CC=C", state="gas",
         tax=(HC, "Alkenes", "1-Alkenes"), g=(20.4, 0.8)),
    dict(name="1-Butene", syn=[], cas="106-98-9", smi="CCC=C", state="gas",
         tax=(HC, "Alkenes", "1-Alkenes"), g=(-0.1, 1.0)),
    dict(name="cis-2-Butene", syn=["(Z)-2-Butene"], cas="590-18-1", smi="C/C=C\\C",
         state="gas", tax=(HC, "Alkenes", "2-Alkenes"), g=(-7.1, 1.0)),
    dict(name="2-Methylpropene", syn=["Isobutylene"], cas="115-11-7", smi="CC(C)=C",
         state="gas", tax=(HC, "Alkenes", "Branched Alkenes"), g=(-17.1, 1.0)),
    dict(name="1-Pentene", syn=[], cas="109-67-1", smi="CCCC=C", state="liquid",
         tax=(HC, "Alkenes", "1-Alkenes"), g=(-21.3, 1.0), vap=(25.2, 0.2), l="derived"),
    dict(name="1-Hexene", syn=[], cas="592-41-6", smi="CCCCC=C", state="liquid",
         tax=(HC, "Alkenes", "1-Alkenes"), g=(-41.7, 1.0), vap=(30.6, 0.2), l="derived"),
    dict(name="Cyclohexene", syn=["Tetrahydrobenzene"], cas="110-83-8", smi="C1CCC=CC1",
         state="liquid", tax=(HC, "Alkenes", "Cycloalkenes"),
         g=(-5.0, 0.7), vap=(33.5, 0.2), l="derived"),
    dict(name="Ethyne", syn=["Acetylene"], cas="74-86-2", smi="C#C", state="gas",
         tax=(HC, "Alkynes", "1-Alkynes"), g=(228.2, 0.7)),
    dict(name="Propyne", syn=["Methylacetylene"], cas="74-99-7", smi="CC#C", state="gas",
         tax=(HC, "Alkynes", "1-Alkynes"), g=(184.9, 1.0)),
    dict(name="1-Butyne", syn=["Ethylacetylene"], cas="107-00-6", smi="CCC#C", state="gas",
         tax=(HC, "Alkynes", "1-Alkynes"), g=(165.2, 1.0)),
    # --- oxygen compounds and other search fodder ------------------------------
    dict(name="Methanol", syn=["Methyl alcohol", "Carbinol"], cas="67-56-1", smi="CO",
         state="liquid", tax=(OXY, "Alkanols", "Primary Alcohols"),
         g=(-201.5, 0.3), vap=(37.6, 0.4), l="derived"),
    dict(name="Ethanol", syn=["Ethyl alcohol"], cas="64-17-5", smi="CCO",
         state="liquid", tax=(OXY, "Alkanols", "Primary Alcohols"),
         g=(-234.8, 0.5), vap=(42.8, 0.4), l="derived"),
    dict(id="C001290", name="(Hydroxymethyl)oxirane", syn=["Glycidol", "Oxiranylmethanol"],
         cas="556-52-5", smi="OCC1CO1", state="liquid",
         tax=(RING_NB, "Cyclic Ethers", "Epoxides"), l=(-297.9, 2.0)),
    dict(id="C001332", name="3,4-Dihydroxy-3-cyclobutene-1,2-dione",
         syn=["Dihydroxycyclobutenedione", "Quadratic acid", "Squaric acid",
              "1,2-Dihydroxycyclobutene-3,4-dione", "3,4-Diketo-1,2-dihydroxycyclobutene",
              "1,2-Dihydroxycyclobutenedione", "1,2-Dihydroxy-3,4-cyclobutenedione",
              "3,4-Dihydroxycyclobutene-1,2-dione", "4-Hydroxycyclobutane-1,2,3-trione"],
         cas="2892-51-5", smi="OC1=C(O)C(=O)C1=O", state="crystal",
         tax=(RING_NB, "Cyclic Ketones", "Cyclobutenediones"),
         cr=(-596.2, 0.4), g=(-514.5, 16.6), sub=(83.7, 16.7),
         obs="Possible keto-enol tautomeric compound."),
    dict(id="C001358", name="Cyclopentanol", syn=["Cyclopentyl alcohol"],
         cas="96-41-3", smi="OC1CCCC1", state="liquid",
         tax=(RING_NB, "Cyclic Alcohols", "Cyclopentanols"),
         g=(-242.5, 1.3), vap=(57.6, 1.0), l="derived"),
    dict(id="C001359", name="cis-2-Methylcyclopentanol", syn=[],
         cas="25144-05-2", smi="O[C@H]1CCC[C@H]1C", state="liquid",
         tax=(RING_NB, "Cyclic Alcohols", "Cyclopentanols"), l=(-328.0, 2.0)),
    dict(name="Naphthalene", syn=["Naphthalin"], cas="91-20-3", smi="c1ccc2ccccc2c1",
         state="crystal", tax=(FUSED, "Two-Ring Arenes", "Naphthalenes"),
         cr=(77.9, 1.3), g=(150.6, 1.5), sub=(72.7, 2.0)),
    dict(name="Pentyl", syn=["1-Pentyl radical", "n-Amyl radical"], cas=None,
         smi="CCCC[CH2]", state="gas", tax=(HC, "Alkyl Radicals", "n-Alkyl Radicals"),
         g=(46.0, 4.0), tags=["radical"]),
]


def build_rows() -> list[dict]:
    rows = []
    next_seq = 1
    for c in COMPOUNDS:
        thermo = []
        g = c.get("g")
        vap = c.get("vap")
        liq = c.get("l")
        if liq == "derived":
            liq = (round(g[0] - vap[0], 1), round(math.hypot(g[1], vap[1]), 1))
        if vap == "derived":
            vap = (round(g[0] - liq[0], 1), round(math.hypot(g[1], liq[1]), 1))
        if g:
            thermo.append({"kind": "formation_gas", "value": g[0], "uncertainty": g[1]})
        if liq:
            thermo.append({"kind": "formation_liquid", "value": liq[0], "uncertainty": liq[1]})
        if c.get("cr"):
            v, u = c["cr"]
            thermo.append({"kind": "formation_crystal", "value": v, "uncertainty": u})
        if vap:
            thermo.append({"kind": "vaporization", "value": vap[0], "uncertainty": vap[1]})
        if c.get("sub"):
            v, u = c["sub"]
            thermo.append({"kind": "sublimation", "value": v, "uncertainty": u})
        if c.get("fus"):
            v, u = c["fus"]
            thermo.append({"kind": "fusion", "value": v, "uncertainty": u})

        tags = sorted(derive_characteristics(parse_smiles(c["smi"])) | set(c.get("tags", [])))
        klass, subclass, family = c["tax"]
        mol_id = c.get("id")
        if mol_id is None:
            mol_id = f"C{next_seq:06d}"
            next_seq += 1
        rows.append(
            {
                "molecular_id": mol_id,
                "name": c["name"],
                "synonyms": c["syn"],
                "casrn": c.get("cas"),
                "smiles": c["smi"],
                "physical_state": c["state"],
                "class": klass,
                "subclass": subclass,
                "family": family,
                "characteristics": tags,
                "thermo": thermo,
                "observations": c.get("obs", ""),
                "references": c.get("refs", [PEDLEY94, PEDLEY86]),
            }
        )
    return rows


def main() -> int:
    rows = build_rows()
    store = Store(data_dir=None)
    report = store.ingest(rows, dataset_id="bundled-fixtures")
    if report.rejected:
        for rej in report.rejected:
            print(f"REJECTED {rej.label}: {rej.reason}", file=sys.stderr)
        return 1
    records = sorted(store.records, key=lambda r: r.molecular_id)
    with open(OUT, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec.to_json(), ensure_ascii=False) + "\n")
    print(f"wrote {len(records)} records to {OUT}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
