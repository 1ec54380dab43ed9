import init, { mapWord, invertWord, listPairs, countTable } from "./pkg/walkavoid_web.js";

const $ = (id) => document.getElementById(id);
const show = (w) => (w === "" ? "ε" : w);

function call(f, ...args) {
  try {
    return [JSON.parse(f(...args)), ""];
  } catch (e) {
    return [null, String(e.message ?? e)];
  }
}

// Draw the domain word as a lattice path: x = position, y = letter.
function drawWalk(word, image, walk) {
  const svg = $("walk");
  const W = svg.width.baseVal.value, H = svg.height.baseVal.value;
  const letters = [...word].map(Number);
  const maxLetter = walk ? 7 : 3;
  const pad = 28;
  const dx = (W - 2 * pad) / Math.max(1, letters.length - 1);
  const dy = (H - 2 * pad) / (maxLetter - 1);
  const x = (i) => pad + i * dx;
  const y = (l) => H - pad - (l - 1) * dy;
  let g = "";
  for (let l = 1; l <= maxLetter; l++) {
    g += `<line x1="${pad}" x2="${W - pad}" y1="${y(l)}" y2="${y(l)}" stroke="#e0e0e0"/>`;
    g += `<text x="6" y="${y(l) + 4}" font-size="11" fill="#888">${l}</text>`;
  }
  const pts = letters.map((l, i) => `${x(i)},${y(l)}`).join(" ");
  g += `<polyline points="${pts}" fill="none" stroke="#1565c0" stroke-width="2"/>`;
  letters.forEach((l, i) => {
    g += `<circle cx="${x(i)}" cy="${y(l)}" r="3.5" fill="#1565c0"/>`;
  });
  g += `<text x="${W - pad}" y="16" text-anchor="end" font-family="monospace" font-size="14">image ${show(image)}</text>`;
  svg.innerHTML = g;
}

function updateMap() {
  const id = $("map-id").value;
  const f = $("map-dir").value === "inv" ? invertWord : mapWord;
  const [r, err] = call(f, id, $("map-word").value.trim());
  $("map-err").textContent = err;
  if (!r) return;
  $("map-domain").textContent = show(r.domain);
  $("map-image").textContent = show(r.image);
  $("map-n").textContent = `(n = ${r.n})`;
  drawWalk(r.domain, r.image, r.walk);
}

function updatePairs() {
  const n = Number($("pairs-n").value);
  $("pairs-n-val").textContent = n;
  const [rows, err] = call(listPairs, $("pairs-id").value, n);
  $("pairs-err").textContent = err;
  if (!rows) {
    $("pairs").innerHTML = "";
    return;
  }
  const body = rows
    .map(([d, u]) => `<tr data-w="${d}"><td>${show(d)}</td><td>${show(u)}</td></tr>`)
    .join("");
  $("pairs").innerHTML = `<table><tr><th>domain</th><th>image</th></tr>${body}</table><p>${rows.length} pairs</p>`;
  for (const tr of $("pairs").querySelectorAll("tr[data-w]")) {
    tr.addEventListener("click", () => {
      $("map-id").value = $("pairs-id").value;
      $("map-dir").value = "fwd";
      $("map-word").value = tr.dataset.w;
      $("pairs").querySelectorAll("tr.sel").forEach((t) => t.classList.remove("sel"));
      tr.classList.add("sel");
      updateMap();
    });
  }
}

function updateCounts() {
  const problem = $("count-problem").value;
  const [rows, err] = call(countTable, problem, Number($("count-max").value));
  $("count-err").textContent = err;
  if (!rows) return;
  const [a, b] = problem === "p1" ? ["p1a", "p1b"] : ["p2a", "p2b"];
  const body = rows
    .map((r) => `<tr><td>${r.n}</td><td>${r.a}</td><td>${r.b}</td><td>${r.equal ? "ok" : "FAIL"}</td></tr>`)
    .join("");
  $("counts").innerHTML = `<table><tr><th>n</th><th>${a}</th><th>${b}</th><th>equal</th></tr>${body}</table>`;
}

await init();
for (const id of ["map-id", "map-dir", "map-word"]) $(id).addEventListener("input", updateMap);
for (const id of ["pairs-id", "pairs-n"]) $(id).addEventListener("input", updatePairs);
for (const id of ["count-problem", "count-max"]) $(id).addEventListener("input", updateCounts);
updateMap();
updatePairs();
updateCounts();
