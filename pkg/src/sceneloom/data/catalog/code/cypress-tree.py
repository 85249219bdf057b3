"""Cypress Tree generator (Trees)."""

PARAMS = {
    "size": 1.615,
    "detail": 5,
    "roughness": 0.716,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Cypress Tree"
    for key, value in params.items():
        node[key] = value
    return node
