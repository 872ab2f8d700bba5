import init, { sl2Reduce, vermaWeightCounts, conformalReduced } from "./pkg/gsmod_web.js";

const show = (id, text, failed) => {
  const el = document.getElementById(id);
  el.textContent = text;
  el.className = failed ? "error" : "";
};

const wire = (formId, outId, run, render) => {
  const form = document.getElementById(formId);
  const go = (event) => {
    event?.preventDefault();
    const result = JSON.parse(run(new FormData(form)));
    if (result.error) show(outId, result.error, true);
    else show(outId, render(result), false);
  };
  form.addEventListener("submit", go);
  go();
};

await init();
document.getElementById("status").textContent = "Ready.";

wire("sl2", "sl2-out",
  (f) => sl2Reduce(Number(f.get("m")), f.get("lambda"), f.get("expr")),
  (r) => [
    `${r.input}  ->  ${r.normal_form}   (${r.steps} steps)`,
    `Groebner-Shirshov pair: ${r.gsb ? "yes" : "no"}`,
    `basis: ${r.basis.join(", ")}`,
  ].join("\n"));

wire("verma", "verma-out",
  (f) => vermaWeightCounts(f.get("cartan"), f.get("weights"), Number(f.get("deg"))),
  (r) => r.words
    .map((ws, d) => `degree ${d}: ${r.counts[d]}` + (ws.length <= 12 ? `  ${ws.join(" ")}` : ""))
    .join("\n"));

wire("conformal", "conformal-out",
  (f) => conformalReduced(f.get("symbols"), Number(f.get("locality")), Number(f.get("lo")),
    Number(f.get("hi")), Number(f.get("deg")), f.get("verma") === "on"),
  (r) => [
    `${r.alphabet.length} letters, ${r.relations} relations`,
    `interior reduced words (${r.interior.length}): ${r.interior.join(", ")}`,
    `boundary words omitted: ${r.boundary}`,
  ].join("\n"));
