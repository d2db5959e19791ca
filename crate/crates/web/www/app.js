import init, { check_spectrum, family_at, fit_meehan } from "./pkg/nniep_web.js";

const $ = (id) => document.getElementById(id);

function el(tag, text, cls) {
  const e = document.createElement(tag);
  if (text !== undefined) e.textContent = text;
  if (cls) e.className = cls;
  return e;
}

function call(f, ...args) {
  const r = JSON.parse(f(...args));
  if (r.error !== undefined) throw new Error(r.error);
  return r.ok;
}

function showError(out, err) {
  out.replaceChildren(el("p", err.message, "bad"));
}

function table(rows, head) {
  const t = el("table");
  if (head) {
    const tr = el("tr");
    head.forEach((h) => tr.append(el("th", h)));
    t.append(tr);
  }
  for (const r of rows) {
    const tr = el("tr");
    r.forEach((c) => (c instanceof Node ? tr.append(el("td")).lastChild.append(c) : tr.append(el("td", String(c)))));
    t.append(tr);
  }
  return t;
}

function matrixText(m) {
  const cell = (x) => (typeof x === "string" ? x : x.b === "0" ? x.a : `${x.a}+${x.b}√${x.d}`);
  const rows = m.entries.map((r) => r.map(cell));
  const w = Math.max(...rows.flat().map((c) => c.length));
  return rows.map((r) => "[ " + r.map((c) => c.padStart(w)).join("  ") + " ]").join("\n");
}

function certLine(c) {
  switch (c.kind) {
    case "matrix":
      return `verified matrix from ${c.source}` + (c.parameter ? ` at t = ${c.parameter}` : "");
    case "deduction":
      return `${c.rule} by ${c.shift} from (${c.premise.values.join(", ")})`;
    case "violated_condition":
      return `${c.report.condition} violated`;
    case "empty_partition_scan":
      return `no viable split among ${c.splits_examined}`;
  }
  return JSON.stringify(c);
}

function runCheck() {
  const out = $("check-out");
  try {
    const r = call(check_spectrum, $("values").value, Number($("depth").value));
    const conds = r.conditions.map((c) => {
      const state = !c.applicable ? "n/a" : c.satisfied ? "ok" : "violated";
      const w = Object.entries(c.witness).map(([k, v]) => `${k}=${v}`).join(" ");
      return [c.condition, el("span", state, state === "violated" ? "bad" : ""), w, c.explain];
    });
    const verdicts = r.verdicts.map((v) => [
      v.problem,
      el("span", v.status, v.status === "REALIZABLE" ? "good" : v.status === "NOT_REALIZABLE" ? "bad" : ""),
      v.certificates.map(certLine).join("; "),
    ]);
    out.replaceChildren(table(conds, ["condition", "", "witness", "meaning"]), table(verdicts, ["problem", "status", "evidence"]));
  } catch (e) {
    showError(out, e);
  }
}

function runFamily() {
  const out = $("family-out");
  try {
    const r = call(family_at, $("family").value, $("family-t").value);
    const th = r.threshold;
    const v = r.verification;
    const flags = ["charpoly_match", "nonnegative", "irreducible", "symmetric", "diagonalizable"].map((k) => [
      k,
      el("span", String(v[k]), v[k] ? "good" : "bad"),
    ]);
    out.replaceChildren(
      el("p", `spectrum (${r.spectrum.values.join(", ")}), nonnegative from t ≈ ${th.closed_form_check?.root_decimal.slice(0, 14) ?? th.threshold_hi}`),
      el("pre", matrixText(r.matrix)),
      table(flags),
    );
    if (v.negative_entries.length) {
      out.append(el("p", "negative entries: " + v.negative_entries.map(([i, j]) => `(${i}, ${j})`).join(" "), "bad"));
    }
  } catch (e) {
    showError(out, e);
  }
}

function runFit() {
  const out = $("fit-out");
  try {
    const r = call(fit_meehan, Number($("fit-t").value));
    const p = r.parameters;
    out.replaceChildren(
      table([["p", p.p], ["q", p.q], ["w", p.w], ["h", p.h], ["residual", r.residual]]),
      el("p", r.nonnegative ? "all parameters nonnegative" : "a parameter is negative", r.nonnegative ? "good" : "bad"),
    );
  } catch (e) {
    showError(out, e);
  }
}

await init();
$("status").textContent = "ready";
$("check").addEventListener("click", runCheck);
$("evaluate").addEventListener("click", runFamily);
$("fit").addEventListener("click", runFit);
runCheck();
