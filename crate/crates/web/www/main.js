import init, { alcoveShadowSvg, vertexShadowSvg, countPolynomial } from "./pkg/chimney_web.js";

const $ = (id) => document.getElementById(id);
const chimney = () => [$("type").value, $("j").value, $("y").value];

function attempt(f) {
  $("error").textContent = "";
  try {
    f();
  } catch (e) {
    $("error").textContent = e.message ?? String(e);
  }
}

await init();

$("alcove").onclick = () => attempt(() => {
  $("picture").innerHTML = alcoveShadowSvg(...chimney(), $("x").value);
});
$("vertex").onclick = () => attempt(() => {
  $("picture").innerHTML = vertexShadowSvg(...chimney(), $("lambda").value);
});
$("count").onclick = () => attempt(() => {
  $("count-out").value = countPolynomial(...chimney(), $("cx").value, $("cz").value, Number($("q").value));
});

$("alcove").click();
