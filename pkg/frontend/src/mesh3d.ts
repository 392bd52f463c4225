// Turns the revolved-mesh document into a three.js scene with orbit
// controls.  Geometry construction is separate from the viewer so it
// can be exercised headless.

import * as THREE from "three";
import { OrbitControls } from "three/addons/controls/OrbitControls.js";

import type { MeshDocument } from "./types.js";

export function buildGeometry(doc: MeshDocument): THREE.BufferGeometry {
  const positions = new Float32Array(doc.vertices.length * 3);
  doc.vertices.forEach(([x, y, z], i) => {
    positions[i * 3] = x;
    positions[i * 3 + 1] = y;
    positions[i * 3 + 2] = z;
  });
  const indices = new Uint32Array(doc.faces.length * 3);
  doc.faces.forEach(([a, b, c], i) => {
    indices[i * 3] = a;
    indices[i * 3 + 1] = b;
    indices[i * 3 + 2] = c;
  });
  const geometry = new THREE.BufferGeometry();
  geometry.setAttribute("position", new THREE.BufferAttribute(positions, 3));
  geometry.setIndex(new THREE.BufferAttribute(indices, 1));
  geometry.computeVertexNormals();
  geometry.computeBoundingSphere();
  return geometry;
}

export class MeshViewer {
  private renderer: THREE.WebGLRenderer;
  private scene: THREE.Scene;
  private camera: THREE.PerspectiveCamera;
  private controls: OrbitControls;
  private current: THREE.Mesh | null = null;
  private running = true;

  constructor(private container: HTMLElement) {
    const width = container.clientWidth || 480;
    const height = container.clientHeight || 360;
    this.renderer = new THREE.WebGLRenderer({
      antialias: true,
      preserveDrawingBuffer: true, // needed for PNG capture
    });
    this.renderer.setSize(width, height);
    container.appendChild(this.renderer.domElement);

    this.scene = new THREE.Scene();
    this.scene.background = new THREE.Color(0xf4f4f5);
    this.scene.add(new THREE.AmbientLight(0xffffff, 0.55));
    const key = new THREE.DirectionalLight(0xffffff, 1.0);
    key.position.set(60, 40, 90);
    this.scene.add(key);
    const fill = new THREE.DirectionalLight(0xffffff, 0.35);
    fill.position.set(-40, -60, -30);
    this.scene.add(fill);

    // rotary axis (machine X) horizontal, Z up, gentle isometric tilt
    this.camera = new THREE.PerspectiveCamera(40, width / height, 0.1, 5000);
    this.camera.up.set(0, 0, 1);
    this.controls = new OrbitControls(this.camera, this.renderer.domElement);
    this.controls.enableDamping = true;

    const animate = () => {
      if (!this.running) return;
      requestAnimationFrame(animate);
      this.controls.update();
      this.renderer.render(this.scene, this.camera);
    };
    animate();
  }

  setMesh(doc: MeshDocument | null): void {
    if (this.current !== null) {
      this.scene.remove(this.current);
      this.current.geometry.dispose();
      (this.current.material as THREE.Material).dispose();
      this.current = null;
    }
    if (doc === null) return;
    const geometry = buildGeometry(doc);
    const material = new THREE.MeshStandardMaterial({
      color: 0xb8860b,
      metalness: 0.1,
      roughness: 0.65,
      side: THREE.DoubleSide,
      flatShading: true, // the facets are the point of the preview
    });
    this.current = new THREE.Mesh(geometry, material);
    this.scene.add(this.current);

    const sphere = geometry.boundingSphere;
    const center = sphere?.center ?? new THREE.Vector3();
    const radius = sphere?.radius ?? 10;
    this.controls.target.copy(center);
    this.camera.position.set(
      center.x + radius * 1.6,
      center.y - radius * 1.6,
      center.z + radius * 1.1,
    );
    this.camera.lookAt(center);
    this.controls.update();
  }

  /** PNG of the current view, for the download button. */
  captureImage(): string {
    this.renderer.render(this.scene, this.camera);
    return this.renderer.domElement.toDataURL("image/png");
  }

  resize(): void {
    const width = this.container.clientWidth || 480;
    const height = this.container.clientHeight || 360;
    this.camera.aspect = width / height;
    this.camera.updateProjectionMatrix();
    this.renderer.setSize(width, height);
  }

  dispose(): void {
    this.running = false;
    this.setMesh(null);
    this.controls.dispose();
    this.renderer.dispose();
    this.renderer.domElement.remove();
  }
}
