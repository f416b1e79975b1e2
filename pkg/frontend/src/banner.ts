// Dismissible error banner shared by all views.

export function showBanner(host: HTMLElement, message: string): void {
  clearBanner(host);
  const banner = document.createElement("div");
  banner.className = "error-banner";
  const text = document.createElement("span");
  text.textContent = message;
  const dismiss = document.createElement("button");
  dismiss.className = "banner-dismiss";
  dismiss.textContent = "×";
  dismiss.addEventListener("click", () => banner.remove());
  banner.append(text, dismiss);
  host.prepend(banner);
}

export function clearBanner(host: HTMLElement): void {
  host.querySelector(".error-banner")?.remove();
}
