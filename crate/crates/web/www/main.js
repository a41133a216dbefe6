import init, {
  example_graph,
  partition_weights,
  symmetric_weights,
  contact_matrix,
} from "./pkg/treeweights_web.js";

const $ = (id) => document.getElementById(id);

function fail(target, e) {
  target.innerHTML = "";
  const p = document.createElement("p");
  p.className = "err";
  p.textContent = e instanceof Error ? e.message : String(e);
  target.appendChild(p);
}

function table(headers, rows) {
  const t = document.createElement("table");
  const head = t.insertRow();
  for (const h of headers) {
    const th = document.createElement("th");
    th.textContent = h;
    head.appendChild(th);
  }
  for (const r of rows) {
    const tr = t.insertRow();
    for (const cell of r) tr.insertCell().textContent = cell;
  }
  return t;
}

function loadExample() {
  $("graph").value = example_graph($("example").value);
  $("partition").value = $("example").value === "triangle" ? "v1|v2,v3" : "v1|v2|v3,v4";
  $("order").value = $("example").value === "triangle" ? "l1,l3" : "l1,l2,l5";
  $("sliders").innerHTML = "";
  $("matrix-out").innerHTML = "";
}

function runWeights() {
  const out = $("weights-out");
  try {
    const res = JSON.parse(partition_weights($("graph").value, $("partition").value));
    out.innerHTML = "";
    out.appendChild(table(
      ["tree", "weight", "decimal", "orderings"],
      res.trees.map((t) => [t.edges.join(" "), t.weight, t.decimal, t.orderings]),
    ));
    const p = document.createElement("p");
    p.textContent = `partition ${res.partition}, total ${res.total}`;
    out.appendChild(p);
  } catch (e) {
    fail(out, e);
  }
}

function runSymmetric() {
  const out = $("symmetric-out");
  try {
    const res = JSON.parse(symmetric_weights($("graph").value, Number($("guard").value)));
    out.innerHTML = "";
    out.appendChild(table(
      ["tree", "sectors", "census", "singletons", "decimal"],
      res.trees.map((t) => [t.edges.join(" "), t.sectors, t.census, t.partition, t.decimal]),
    ));
    const p = document.createElement("p");
    p.className = res.agree ? "ok" : "err";
    p.textContent = `${res.sectors} sectors; routes ${res.agree ? "agree" : "disagree"}`;
    out.appendChild(p);
  } catch (e) {
    fail(out, e);
  }
}

function uValues() {
  return Float64Array.from(
    document.querySelectorAll("#sliders input"),
    (s) => Number(s.value),
  );
}

function renderMatrix() {
  const out = $("matrix-out");
  try {
    const res = JSON.parse(contact_matrix(
      $("graph").value, $("partition").value, $("order").value, uValues(),
    ));
    out.innerHTML = "";
    const rows = res.matrix.map((row, v) => [
      res.vertices[v],
      ...row.map((x, w) => `${x.toFixed(4)} (${res.contacts[v][w].join(",")})`),
    ]);
    out.appendChild(table(["", ...res.vertices], rows));
    const p = document.createElement("p");
    p.className = res.min_eigenvalue >= -1e-10 ? "ok" : "err";
    p.textContent =
      `k = (${res.k.join(", ")}), weight ${res.weight}; ` +
      `min eigenvalue ${res.min_eigenvalue.toExponential(3)}; ` +
      `recursion differs by ${res.recursion_max_diff.toExponential(2)}`;
    out.appendChild(p);
  } catch (e) {
    fail(out, e);
  }
}

function loadMatrix() {
  const steps = $("order").value.split(",").filter((s) => s.trim()).length;
  const box = $("sliders");
  box.innerHTML = "";
  for (let p = 1; p <= steps; p++) {
    const label = document.createElement("label");
    label.textContent = `u${p} `;
    const s = document.createElement("input");
    s.type = "range";
    s.min = "0";
    s.max = "1";
    s.step = "0.01";
    s.value = "0.5";
    s.addEventListener("input", renderMatrix);
    label.appendChild(s);
    box.appendChild(label);
  }
  renderMatrix();
}

await init();
$("example").addEventListener("change", loadExample);
$("run-weights").addEventListener("click", runWeights);
$("run-symmetric").addEventListener("click", runSymmetric);
$("run-matrix").addEventListener("click", loadMatrix);
loadExample();
runWeights();
